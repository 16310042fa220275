#pragma once

#include "pbsym/poly.hpp"

namespace pbsym {

// A member of the closed function class the engine works in:
//
//     poly(x) * (prod_{i<j} (x_i^2 - x_j^2))^mu * exp(gamma * sum_i x_i^2)
//
// on the chamber x_1^2 > x_2^2 > ... where the prefactor is positive.
// Canonical form: a non-negative integer mu is absorbed into poly (mu = 0);
// otherwise the prefactor is divided out of poly as often as it divides
// exactly. Equality of canonical forms is structural.
class Element {
public:
    explicit Element(int nvars = 0) : poly_(nvars), mu_(0), gamma_(0) {}
    Element(PolyN poly, const Rational& mu, const Rational& gamma);

    static Element zero(int nvars) { return Element(nvars); }
    static Element one(int nvars) { return from_poly(PolyN::constant(nvars, RadScalar(1))); }
    static Element from_poly(PolyN p) { return Element(std::move(p), 0, 0); }
    static Element variable(int nvars, int i) { return from_poly(PolyN::variable(nvars, i)); }
    // prod_{i<j} (x_i^2 - x_j^2) as a polynomial
    static PolyN pair_prefactor(int nvars);

    int nvars() const { return poly_.nvars(); }
    const PolyN& poly() const { return poly_; }
    const Rational& mu() const { return mu_; }
    const Rational& gamma() const { return gamma_; }
    bool is_zero() const { return poly_.is_zero(); }

    Element derivative(int i) const;  // exact d/dx_i across all three factors

    Element operator-() const;
    Element operator+(const Element& o) const;  // throws incompatible_sum_error
    Element operator-(const Element& o) const { return *this + (-o); }
    Element operator*(const Element& o) const;
    Element scaled(const RadScalar& c) const;
    Element shift_gamma(const Rational& d) const;  // multiply by exp(d * sum x_i^2)

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Scaling degree of the poly * prefactor part (the Gaussian is carried
    // along, not graded). Requires a homogeneous poly part and an integer
    // total contribution from mu.
    int graded_degree() const;
    bool is_graded_homogeneous() const;

    // True when the element is a constant scalar (degree-0 poly, mu = 0,
    // gamma = 0); constant_value extracts it.
    bool is_constant() const;
    RadScalar constant_value() const;

    double eval(const std::vector<double>& x) const;
    // poly * prefactor^mu only, without the Gaussian factor (lets integrators
    // combine Gaussian exponents exactly instead of multiplying huge and tiny
    // floating-point factors)
    double eval_poly_part(const std::vector<double>& x) const;
    std::string str() const;

private:
    PolyN poly_;
    Rational mu_;
    Rational gamma_;
    void canonicalize();
};

inline Element operator*(const RadScalar& c, const Element& e) { return e.scaled(c); }

// Average of f over the 4-element group generated by x1 <-> x2 and
// (x1,x2) -> (-x1,-x2). Requires N = 2 and an integer prefactor power.
Element symmetrize_d2(const Element& f);

// Contribution of the prefactor to the scaling degree: mu * 2 * C(N,2),
// which must be an integer (error otherwise).
int prefactor_graded_degree(const Rational& mu, int nvars);

}
