#include "pbsym/hermite.hpp"

#include "pbsym/errors.hpp"

namespace pbsym {

PolyN hermite_scaled(int n, int nvars, int var, const Rational& omega) {
    if (n < 0) throw value_error("negative Hermite index");
    if (omega <= 0) throw value_error("Hermite scale must be positive");
    PolyN prev = PolyN::constant(nvars, RadScalar(1));
    if (n == 0) return prev;
    RadScalar two_sqrt_omega = RadScalar(2) * RadScalar::sqrt_of(omega);
    PolyN x = PolyN::variable(nvars, var);
    PolyN cur = x.scaled(two_sqrt_omega);
    for (int k = 1; k < n; ++k) {
        PolyN next = (x * cur).scaled(two_sqrt_omega) - prev.scaled(RadScalar(2 * k));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RadScalar hermite_norm_factor(int n) {
    if (n < 0) throw value_error("negative Hermite index");
    Rational d = pow_rational(Rational(2), n) * factorial(n);
    return RadScalar::sqrt_of(1 / d);
}

}
