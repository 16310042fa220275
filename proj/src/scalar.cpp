#include "pbsym/scalar.hpp"

#include <cmath>
#include <sstream>

namespace pbsym {

namespace {

// Splits n > 0 as s^2 * t with t squarefree. Trial division certifies
// squarefreeness for n <= 1e8; larger leftovers are only accepted when they
// are perfect squares (every radicand arising in this engine is tiny).
void extract_square_part(Integer n, Integer& square_root, Integer& squarefree) {
    square_root = 1;
    for (Integer d = 2; d <= 10000 && d * d <= n; ++d) {
        while (n % (d * d) == 0) {
            n /= d * d;
            square_root *= d;
        }
    }
    if (n > 100000000) {
        Integer r = boost::multiprecision::sqrt(n);
        if (r * r == n) {
            square_root *= r;
            n = 1;
        } else {
            throw value_error("radicand too large to canonicalize: " + n.str());
        }
    } else {
        Integer r = boost::multiprecision::sqrt(n);
        if (r * r == n) {
            square_root *= r;
            n = 1;
        }
    }
    squarefree = n;
}

}  // namespace

void RadScalar::insert(const Rational& coeff, const Integer& radicand, int pi_half) {
    if (coeff == 0) return;
    RadKey key{radicand, pi_half};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

RadScalar RadScalar::term(const Rational& coeff, const Integer& radicand, int pi_half) {
    if (radicand <= 0) throw value_error("radicand must be positive");
    Integer s, t;
    extract_square_part(radicand, s, t);
    RadScalar out;
    out.insert(coeff * Rational(s), t, pi_half);
    return out;
}

RadScalar RadScalar::sqrt_of(const Rational& r) {
    if (r < 0) throw value_error("square root of a negative rational");
    if (r == 0) return RadScalar();
    // sqrt(p/q) = sqrt(p*q)/q
    return term(Rational(1, den(r)), num(r) * den(r), 0);
}

RadScalar RadScalar::pi_pow(int pi_half) {
    RadScalar out;
    out.insert(1, 1, pi_half);
    return out;
}

bool RadScalar::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == RadKey{1, 0};
}

Rational RadScalar::as_rational() const {
    if (terms_.empty()) return 0;
    if (!is_rational()) throw value_error("scalar is not rational: " + str());
    return terms_.begin()->second;
}

RadScalar RadScalar::operator-() const {
    RadScalar out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

RadScalar RadScalar::operator+(const RadScalar& o) const {
    RadScalar out = *this;
    for (const auto& [k, c] : o.terms_) out.insert(c, k.radicand, k.pi_half);
    return out;
}

RadScalar RadScalar::operator*(const RadScalar& o) const {
    RadScalar out;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            // sqrt(t1)*sqrt(t2) = g*sqrt((t1/g)*(t2/g)) with g = gcd; the
            // product of the coprime cofactors of squarefree numbers is
            // squarefree, so no re-canonicalization is needed.
            Integer g = boost::multiprecision::gcd(ka.radicand, kb.radicand);
            Integer t = (ka.radicand / g) * (kb.radicand / g);
            out.insert(ca * cb * Rational(g), t, ka.pi_half + kb.pi_half);
        }
    }
    return out;
}

RadScalar RadScalar::inverse() const {
    if (terms_.empty()) throw value_error("division by zero scalar");
    if (terms_.size() != 1)
        throw inverse_of_sum_error("inverse of a multi-term scalar is not supported: " + str());
    const auto& [k, c] = *terms_.begin();
    // 1/(c*sqrt(t)*pi^(h/2)) = (1/(c*t))*sqrt(t)*pi^(-h/2)
    RadScalar out;
    out.insert(Rational(1) / (c * Rational(k.radicand)), k.radicand, -k.pi_half);
    return out;
}

double RadScalar::to_double() const {
    double out = 0.0;
    const double pi = 3.14159265358979323846;
    for (const auto& [k, c] : terms_) {
        double v = pbsym::to_double(c) * std::sqrt(k.radicand.convert_to<double>());
        v *= std::pow(pi, 0.5 * k.pi_half);
        out += v;
    }
    return out;
}

std::string RadScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational cc = c;
        if (first) {
            if (cc < 0) { os << "-"; cc = -cc; }
        } else {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0) cc = -cc;
        }
        first = false;
        bool has_factor = k.radicand != 1 || k.pi_half != 0;
        bool coeff_shown = !has_factor || cc != 1;
        if (coeff_shown) os << to_string(cc);
        if (k.radicand != 1) {
            if (coeff_shown) os << "*";
            os << "sqrt(" << k.radicand.str() << ")";
            coeff_shown = true;
        }
        if (k.pi_half != 0) {
            if (coeff_shown) os << "*";
            if (k.pi_half % 2 == 0) {
                os << "pi^" << (k.pi_half / 2 == 1 ? std::string("1") : std::to_string(k.pi_half / 2));
            } else {
                os << "pi^(" << k.pi_half << "/2)";
            }
        }
    }
    return os.str();
}

}
