#pragma once

#include <map>
#include <vector>

#include "pbsym/element.hpp"

namespace pbsym {

// Finitely supported coordinates on the oscillator-eigenfunction side: the
// pulled-back inner product <f, g>_T = <T^{-1} f, T^{-1} g> is evaluated on
// pre-images under the similarity map, where the eigenfunctions are an
// orthonormal basis, so it reduces to a coordinate dot product.
struct TSpaceVector {
    std::map<std::vector<int>, RadScalar> coords;

    static TSpaceVector unit(std::vector<int> index) {
        TSpaceVector u;
        u.coords.emplace(std::move(index), RadScalar(1));
        return u;
    }
};

RadScalar inner_product_t(const TSpaceVector& u, const TSpaceVector& v);

// Exact integral over R^nvars of x^alpha exp(-decay * X^2) with decay > 0.
// Separable: each odd axis power gives 0; an even power 2m contributes
// (2m-1)!! / (2 decay)^m * sqrt(pi / decay).
RadScalar gaussian_moment(const Monomial& alpha, const Rational& decay);

// Exact inner product <f, g> in the weighted space with measure
// exp(gamma_pi * X^2) dx. The combined integrand must reduce to a pure
// polynomial times a decaying Gaussian: a leftover prefactor power raises
// value_error, a non-negative total Gaussian exponent raises
// divergent_integral_error. Functions in the working class are real, so no
// conjugation is involved.
RadScalar inner_product_weighted(const Element& f, const Element& g, const Rational& gamma_pi);

// Floating-point cross-check of the same integral via tensor-product
// Gauss quadrature: exact Gaussian exponents are combined symbolically and
// absorbed into the rule's weight, so only the polynomial/prefactor parts are
// evaluated numerically. Handles non-integer prefactor powers (measure
// convention |prefactor|^mu), which the exact path cannot.
double quad_inner_product(const Element& f, const Element& g, const Rational& gamma_pi,
                          int order = 40);

}
