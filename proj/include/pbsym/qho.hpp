#pragma once

#include "pbsym/diffop.hpp"
#include "pbsym/gaussint.hpp"
#include "pbsym/hermite.hpp"

namespace pbsym {

// Normalized eigenfunction of the two-dimensional harmonic oscillator with
// frequency omega:
//   (n1! n2! 2^{n1+n2})^{-1/2} sqrt(omega/pi)
//       H_{n1}(sqrt(omega) x1) H_{n2}(sqrt(omega) x2) exp(-omega X^2 / 2).
Element oscillator_eigenfunction(const Rational& omega, int n1, int n2);

// Two-mode oscillator pair acting on the weighted space whose measure is
// exp((beta - omega) X^2) dx, with 0 < beta <= omega. The mode operators
//
//     lowering_j = (omega x_j + d_j) / sqrt(2 omega)
//     raising_j  = (omega x_j - d_j) / sqrt(2 omega)
//
// satisfy [lowering_j, raising_k] = delta_{jk}. raising is NOT the weighted
// adjoint of lowering unless beta = omega: the weighted adjoints (star)
// generate a second family of states, biorthogonal to the first. Both
// families are images of one orthonormal basis under a Gaussian multiplier
// and its inverse, which this class also exposes at the midpoint
// beta = omega / 2 where the multiplier is exp(-omega X^2 / 4).
class QhoSystem {
public:
    QhoSystem(const Rational& omega, const Rational& beta);

    const Rational& omega() const { return omega_; }
    const Rational& beta() const { return beta_; }
    Rational weight_exponent() const { return beta_ - omega_; }  // Gaussian power of the measure

    DiffOp lowering(int j) const;
    DiffOp raising(int j) const;
    DiffOp lowering_star(int j) const { return lowering(j).star(weight_exponent()); }
    DiffOp raising_star(int j) const { return raising(j).star(weight_exponent()); }
    DiffOp number(int j) const { return raising(j).compose(lowering(j)); }
    DiffOp number_star(int j) const { return number(j).star(weight_exponent()); }
    // omega (number_1 + number_2); eigenvalue omega (n1 + n2) on the first
    // family, and its star has the same eigenvalues on the second family.
    DiffOp shifted_hamiltonian() const;

    // First family: ladder construction  state_{n+1} = raising state_n / sqrt(n+1)
    // per mode, seeded by sqrt(omega/pi) exp(-omega X^2 / 2).
    Element first_state(int n1, int n2) const;
    // Same states in closed form through scaled Hermite polynomials.
    Element first_state_closed(int n1, int n2) const;

    // Second family: built by the weighted adjoint of lowering, seeded by
    // sqrt(omega/pi) exp((omega/2 - beta) X^2).
    Element second_state(int n1, int n2) const;
    // Closed form: the first family times exp((omega - beta) X^2). At the
    // midpoint beta = omega/2 the Gaussians cancel and the states are pure
    // polynomials.
    Element second_state_closed(int n1, int n2) const;

    // Orthonormal basis of the weighted space linking the two families:
    // e_n = exp(omega X^2 / 4) first_n, with first_n = multiplier e_n and
    // second_n = multiplier^{-1} e_n. Requires beta = omega / 2.
    Element midpoint_basis(int n1, int n2) const;
    Element midpoint_multiplier() const;  // exp(-omega X^2 / 4) as an element

    // Metric multipliers at beta = omega / 2: exp(-omega X^2 / 2) maps the
    // second family onto the first, exp(+omega X^2 / 2) inverts it, and they
    // intertwine the number operators with their weighted adjoints.
    Element metric_to_first() const;
    Element metric_to_second() const;

    RadScalar pairing(const Element& f, const Element& g) const {
        return inner_product_weighted(f, g, weight_exponent());
    }
    double pairing_oracle(const Element& f, const Element& g, int order = 40) const {
        return quad_inner_product(f, g, weight_exponent(), order);
    }

private:
    Rational omega_;
    Rational beta_;
    Element ladder_states(const DiffOp& step1, const DiffOp& step2, Element state, int n1,
                          int n2) const;
};

}
