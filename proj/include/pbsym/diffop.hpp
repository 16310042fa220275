#pragma once

#include <vector>

#include "pbsym/series.hpp"

namespace pbsym {

// Mixed-partial multi-index; length equals the variable count.
using DerivIndex = std::vector<int>;

// A differential operator in normal-ordered form: a finite sum of
// coefficient * d^alpha terms with all derivatives to the right of their
// Element coefficients. The map representation merges equal multi-indices,
// so structural equality of canonicalized operators is operator equality.
class DiffOp {
public:
    explicit DiffOp(int nvars = 0) : nvars_(nvars) {}

    static DiffOp identity(int nvars);
    static DiffOp partial(int nvars, int i);     // d/dx_i
    static DiffOp coordinate(int nvars, int i);  // multiplication by x_i
    static DiffOp multiplication(const Element& e);
    static DiffOp term(const Element& coeff, const DerivIndex& alpha);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<DerivIndex, Element>& terms() const { return terms_; }

    Element apply(const Element& f) const;
    GradedSeries apply(const GradedSeries& s) const;

    DiffOp operator-() const;
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const { return *this + (-o); }
    DiffOp& operator+=(const DiffOp& o) { *this = *this + o; return *this; }
    DiffOp scaled(const RadScalar& c) const;

    // Normal-ordered operator product (*this applied after o).
    DiffOp compose(const DiffOp& o) const;

    bool operator==(const DiffOp& o) const;
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    // Unweighted formal adjoint: x_i -> x_i, d_i -> -d_i, products reversed.
    // Coefficients must have no Gaussian part.
    DiffOp dagger() const;
    // Adjoint in the weighted space with weight exp(gamma_pi * sum x_i^2):
    // d_i -> -d_i - 2*gamma_pi*x_i. Reduces to dagger() at gamma_pi = 0.
    DiffOp star(const Rational& gamma_pi) const;

    // Largest scaling degree over all terms (degree of the coefficient's
    // top homogeneous part minus the derivative order). INT_MIN when zero.
    int max_graded_degree() const;

    std::string str() const;

private:
    int nvars_;
    std::map<DerivIndex, Element> terms_;
    void insert(const DerivIndex& alpha, const Element& coeff);
};

inline DiffOp operator*(const RadScalar& c, const DiffOp& op) { return op.scaled(c); }

DiffOp commutator(const DiffOp& a, const DiffOp& b);

// exp(c*op) f summed until the series terminates; recognizes multiplication
// by a multiple of sum x_i^2 as an exact Gaussian-exponent shift. Throws
// nontermination_error (with the first surviving term as witness) if the
// series is still alive after iteration_bound steps.
Element apply_exp_exact(const RadScalar& c, const DiffOp& op, const Element& f,
                        int iteration_bound = 64);

// exp(c*op) f with degrees below cutoff dropped; requires a strictly
// degree-lowering generator so that the retained window stabilizes.
GradedSeries apply_exp_truncated(const RadScalar& c, const DiffOp& op, const Element& f,
                                 int cutoff);
GradedSeries apply_exp_truncated(const RadScalar& c, const DiffOp& op, const GradedSeries& s);

// exp(c*S) B exp(-c*S) through the nested-commutator series, which must
// terminate within the iteration bound.
DiffOp ad_exponential(const RadScalar& c, const DiffOp& S, const DiffOp& B,
                      int iteration_bound = 64);

struct SpanComparison {
    bool equal = true;
    std::string witness;  // first mismatching span element and both images
};
SpanComparison equal_on_span(const DiffOp& a, const DiffOp& b, const std::vector<Element>& span);

// All monomials x^m with total degree <= degmax, in deterministic order.
std::vector<Element> monomial_span(int nvars, int degmax);

}
