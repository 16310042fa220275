#pragma once

#include "pbsym/poly.hpp"

namespace pbsym {

// Physicists' Hermite polynomial H_n evaluated at sqrt(omega) * x_var,
// expanded exactly in the coordinate ring on nvars variables. Odd-degree
// coefficients carry the radical sqrt(omega) when omega is not a perfect
// square. Recurrence: H_{n+1}(y) = 2 y H_n(y) - 2 n H_{n-1}(y).
PolyN hermite_scaled(int n, int nvars, int var, const Rational& omega);

// 1 / sqrt(2^n n!), the oscillator normalization attached to one mode.
RadScalar hermite_norm_factor(int n);

}
