#pragma once

#include <map>
#include <string>

#include "pbsym/rational.hpp"

namespace pbsym {

// One basis monomial of the scalar ring: sqrt(radicand) * pi^(pi_half/2).
// radicand is a squarefree positive integer (1 means no radical part).
struct RadKey {
    Integer radicand;
    int pi_half;
    bool operator<(const RadKey& o) const {
        if (radicand != o.radicand) return radicand < o.radicand;
        return pi_half < o.pi_half;
    }
    bool operator==(const RadKey& o) const {
        return radicand == o.radicand && pi_half == o.pi_half;
    }
};

// Exact scalar: a finite Q-linear combination of sqrt(t) * pi^(k/2) terms.
// Distinct squarefree radicands are linearly independent over Q and pi is
// transcendental, so a value is zero iff its term map is empty; equality is
// decided by comparing canonical maps.
class RadScalar {
public:
    RadScalar() = default;
    RadScalar(const Rational& r) { insert(Rational(r), Integer(1), 0); }
    RadScalar(long long v) : RadScalar(Rational(v)) {}
    RadScalar(int v) : RadScalar(Rational(v)) {}

    static RadScalar term(const Rational& coeff, const Integer& radicand, int pi_half);
    // Exact square root of a non-negative rational; perfect squares collapse
    // to rationals (sqrt_of(9/4) == 3/2).
    static RadScalar sqrt_of(const Rational& r);
    static RadScalar pi_pow(int pi_half);  // pi^(pi_half/2)

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    bool is_single_term() const { return terms_.size() == 1; }
    Rational as_rational() const;  // throws if a radical or pi part is present

    RadScalar operator-() const;
    RadScalar operator+(const RadScalar& o) const;
    RadScalar operator-(const RadScalar& o) const { return *this + (-o); }
    RadScalar operator*(const RadScalar& o) const;
    RadScalar& operator+=(const RadScalar& o) { *this = *this + o; return *this; }
    RadScalar& operator-=(const RadScalar& o) { *this = *this - o; return *this; }
    RadScalar& operator*=(const RadScalar& o) { *this = *this * o; return *this; }

    // Multiplicative inverse; defined only for single-term scalars.
    RadScalar inverse() const;
    RadScalar operator/(const RadScalar& o) const { return *this * o.inverse(); }

    bool operator==(const RadScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const RadScalar& o) const { return !(*this == o); }

    double to_double() const;
    std::string str() const;

    const std::map<RadKey, Rational>& terms() const { return terms_; }

private:
    std::map<RadKey, Rational> terms_;
    void insert(const Rational& coeff, const Integer& radicand, int pi_half);
};

inline RadScalar operator*(const Rational& r, const RadScalar& s) { return RadScalar(r) * s; }
inline RadScalar operator+(const Rational& r, const RadScalar& s) { return RadScalar(r) + s; }

}
