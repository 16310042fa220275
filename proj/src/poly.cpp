#include "pbsym/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace pbsym {

namespace {

int degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

void PolyN::insert(const Monomial& m, const RadScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyN PolyN::constant(int nvars, const RadScalar& c) {
    PolyN p(nvars);
    p.insert(Monomial(nvars, 0), c);
    return p;
}

PolyN PolyN::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw value_error("variable index out of range");
    PolyN p(nvars);
    Monomial m(nvars, 0);
    m[i - 1] = 1;
    p.insert(m, RadScalar(1));
    return p;
}

PolyN PolyN::monomial(int nvars, const Monomial& m, const RadScalar& c) {
    if (static_cast<int>(m.size()) != nvars) throw value_error("monomial length mismatch");
    for (int e : m)
        if (e < 0) throw value_error("negative exponent in monomial");
    PolyN p(nvars);
    p.insert(m, c);
    return p;
}

bool PolyN::is_constant() const { return total_degree() <= 0; }

RadScalar PolyN::constant_value() const {
    if (is_zero()) return RadScalar();
    if (!is_constant()) throw value_error("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

int PolyN::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
    return d;
}

PolyN PolyN::operator-() const {
    PolyN p(nvars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

PolyN PolyN::operator+(const PolyN& o) const {
    if (nvars_ != o.nvars_) throw value_error("variable count mismatch in polynomial sum");
    PolyN p = *this;
    for (const auto& [m, c] : o.terms_) p.insert(m, c);
    return p;
}

PolyN PolyN::operator*(const PolyN& o) const {
    if (nvars_ != o.nvars_) throw value_error("variable count mismatch in polynomial product");
    PolyN p(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(nvars_);
            for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            p.insert(m, ca * cb);
        }
    }
    return p;
}

PolyN PolyN::scaled(const RadScalar& c) const {
    PolyN p(nvars_);
    if (c.is_zero()) return p;
    for (const auto& [m, mc] : terms_) p.insert(m, mc * c);
    return p;
}

PolyN PolyN::derivative(int i) const {
    if (i < 1 || i > nvars_) throw value_error("variable index out of range");
    PolyN p(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[i - 1] == 0) continue;
        Monomial d = m;
        d[i - 1] -= 1;
        p.insert(d, Rational(m[i - 1]) * c);
    }
    return p;
}

bool PolyN::operator==(const PolyN& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

RadScalar PolyN::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RadScalar() : it->second;
}

bool PolyN::divide_exact(const PolyN& divisor, PolyN& quotient) const {
    if (divisor.is_zero()) throw value_error("division by the zero polynomial");
    if (nvars_ != divisor.nvars_) throw value_error("variable count mismatch in division");
    PolyN rem = *this;
    PolyN q(nvars_);
    // Leading term in the map's lexicographic key order; for a single divisor
    // the greedy cancellation terminates (the leading monomial strictly
    // decreases) and leaves zero iff the division is exact.
    const auto& [dm, dc] = *divisor.terms_.rbegin();
    RadScalar dc_inv = dc.inverse();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        if (!monomial_divides(dm, rm)) return false;
        Monomial qm(nvars_);
        for (int i = 0; i < nvars_; ++i) qm[i] = rm[i] - dm[i];
        RadScalar qc = rc * dc_inv;
        PolyN t = PolyN::monomial(nvars_, qm, qc);
        q += t;
        rem = rem - t * divisor;
    }
    quotient = q;
    return true;
}

bool PolyN::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree_of(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (degree_of(m) != d) return false;
    return true;
}

std::map<int, PolyN> PolyN::homogeneous_split() const {
    std::map<int, PolyN> out;
    for (const auto& [m, c] : terms_) {
        int d = degree_of(m);
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, PolyN(nvars_)).first;
        it->second.insert(m, c);
    }
    return out;
}

double PolyN::eval(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw value_error("evaluation point size mismatch");
    double out = 0.0;
    for (const auto& [m, c] : terms_) {
        double v = c.to_double();
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < m[i]; ++k) v *= x[i];
        out += v;
    }
    return out;
}

std::string PolyN::str() const {
    if (terms_.empty()) return "0";
    // graded-lexicographic, highest degree first, for stable report rendering
    std::vector<const std::pair<const Monomial, RadScalar>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        int da = degree_of(a->first), db = degree_of(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const auto& [m, c] = *t;
        std::string cs = c.str();
        bool negated = false;
        if (c.terms().size() == 1 && cs.size() && cs[0] == '-') {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;
        bool multi_term_coeff = c.terms().size() > 1;
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i + 1);
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            os << (multi_term_coeff ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            os << vars;
        } else {
            os << (multi_term_coeff ? "(" + cs + ")" : cs) << "*" << vars;
        }
    }
    return os.str();
}

}
