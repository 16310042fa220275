#pragma once

#include <map>
#include <string>
#include <vector>

#include "pbsym/scalar.hpp"

namespace pbsym {

// Exponent vector; length equals the variable count of the owning polynomial.
using Monomial = std::vector<int>;

// Multivariate polynomial with exact RadScalar coefficients.
// Invariant: no zero coefficients stored; every key has length nvars.
class PolyN {
public:
    explicit PolyN(int nvars = 0) : nvars_(nvars) {}

    static PolyN constant(int nvars, const RadScalar& c);
    static PolyN variable(int nvars, int i);  // x_i, 1-based index
    static PolyN monomial(int nvars, const Monomial& m, const RadScalar& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    RadScalar constant_value() const;  // throws unless degree <= 0
    // Total degree; -1 for the zero polynomial.
    int total_degree() const;

    PolyN operator-() const;
    PolyN operator+(const PolyN& o) const;
    PolyN operator-(const PolyN& o) const { return *this + (-o); }
    PolyN operator*(const PolyN& o) const;
    PolyN& operator+=(const PolyN& o) { *this = *this + o; return *this; }
    PolyN& operator*=(const PolyN& o) { *this = *this * o; return *this; }

    PolyN scaled(const RadScalar& c) const;
    PolyN derivative(int i) const;  // d/dx_i, 1-based

    bool operator==(const PolyN& o) const;
    bool operator!=(const PolyN& o) const { return !(*this == o); }

    const std::map<Monomial, RadScalar>& terms() const { return terms_; }
    RadScalar coeff(const Monomial& m) const;

    // Exact division: sets quotient and returns true iff divisor divides this
    // polynomial exactly over the scalar field (divisor's leading coefficient
    // must be a single-term scalar so it can be inverted).
    bool divide_exact(const PolyN& divisor, PolyN& quotient) const;

    bool is_homogeneous() const;
    std::map<int, PolyN> homogeneous_split() const;

    double eval(const std::vector<double>& x) const;
    std::string str() const;  // graded-lexicographic term order

private:
    int nvars_;
    std::map<Monomial, RadScalar> terms_;
    void insert(const Monomial& m, const RadScalar& c);
};

inline PolyN operator*(const RadScalar& c, const PolyN& p) { return p.scaled(c); }

}
