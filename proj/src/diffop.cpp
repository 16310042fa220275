#include "pbsym/diffop.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>

namespace pbsym {

namespace {

int order_of(const DerivIndex& a) {
    int s = 0;
    for (int v : a) s += v;
    return s;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer out = 1;
    for (int i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

// Iterates over all multi-indices gamma <= alpha componentwise.
void for_each_subindex(const DerivIndex& alpha,
                       const std::function<void(const DerivIndex&)>& fn) {
    DerivIndex gamma(alpha.size(), 0);
    while (true) {
        fn(gamma);
        std::size_t i = 0;
        while (i < alpha.size()) {
            if (gamma[i] < alpha[i]) {
                ++gamma[i];
                break;
            }
            gamma[i] = 0;
            ++i;
        }
        if (i == alpha.size()) return;
    }
}

Element repeated_derivative(Element f, const DerivIndex& alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (int k = 0; k < alpha[i]; ++k) f = f.derivative(static_cast<int>(i) + 1);
    return f;
}

// If op is multiplication by r * sum_i x_i^2 with rational r, returns true
// and sets r (used for exact Gaussian-exponent shifts).
bool gaussian_shift_rate(const DiffOp& op, Rational& r) {
    if (op.terms().size() != 1) return false;
    const auto& [alpha, coeff] = *op.terms().begin();
    if (order_of(alpha) != 0) return false;
    if (coeff.mu() != 0 || coeff.gamma() != 0) return false;
    const PolyN& p = coeff.poly();
    int n = p.nvars();
    if (static_cast<int>(p.terms().size()) != n) return false;
    Monomial first(n, 0);
    first[0] = 2;
    RadScalar c0 = p.coeff(first);
    if (c0.is_zero() || !c0.is_rational()) return false;
    PolyN expect(n);
    for (int i = 1; i <= n; ++i) {
        PolyN xi = PolyN::variable(n, i);
        expect += (xi * xi).scaled(c0);
    }
    if (!(expect == p)) return false;
    r = c0.as_rational();
    return true;
}

}  // namespace

void DiffOp::insert(const DerivIndex& alpha, const Element& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, coeff);
    } else {
        Element sum = it->second + coeff;
        if (sum.is_zero())
            terms_.erase(it);
        else
            it->second = sum;
    }
}

DiffOp DiffOp::identity(int nvars) { return term(Element::one(nvars), DerivIndex(nvars, 0)); }

DiffOp DiffOp::partial(int nvars, int i) {
    if (i < 1 || i > nvars) throw value_error("derivative index out of range");
    DerivIndex alpha(nvars, 0);
    alpha[i - 1] = 1;
    return term(Element::one(nvars), alpha);
}

DiffOp DiffOp::coordinate(int nvars, int i) {
    return multiplication(Element::variable(nvars, i));
}

DiffOp DiffOp::multiplication(const Element& e) {
    return term(e, DerivIndex(e.nvars(), 0));
}

DiffOp DiffOp::term(const Element& coeff, const DerivIndex& alpha) {
    if (static_cast<int>(alpha.size()) != coeff.nvars())
        throw value_error("derivative index length mismatch");
    DiffOp op(coeff.nvars());
    op.insert(alpha, coeff);
    return op;
}

Element DiffOp::apply(const Element& f) const {
    if (nvars_ != f.nvars()) throw value_error("operator/function variable count mismatch");
    Element out(nvars_);
    for (const auto& [alpha, coeff] : terms_)
        out = out + coeff * repeated_derivative(f, alpha);
    return out;
}

GradedSeries DiffOp::apply(const GradedSeries& s) const {
    GradedSeries out(s.nvars(), s.cutoff());
    if (s.dropped()) out.mark_dropped();
    if (is_zero() || s.empty()) {
        out.raise_valid_above(s.valid_above());
        return out;
    }
    for (const auto& [d, comp] : s.components()) out.add(apply(comp));
    if (s.dropped() || s.valid_above() > s.cutoff()) {
        // a tail discarded below valid_above() pollutes result degrees up to
        // valid_above() + (top scaling degree of this operator)
        out.raise_valid_above(s.valid_above() + max_graded_degree());
    }
    return out;
}

DiffOp DiffOp::operator-() const {
    DiffOp op(nvars_);
    for (const auto& [alpha, coeff] : terms_) op.terms_.emplace(alpha, -coeff);
    return op;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    if (nvars_ != o.nvars_) throw value_error("variable count mismatch in operator sum");
    DiffOp op = *this;
    for (const auto& [alpha, coeff] : o.terms_) op.insert(alpha, coeff);
    return op;
}

DiffOp DiffOp::scaled(const RadScalar& c) const {
    DiffOp op(nvars_);
    if (c.is_zero()) return op;
    for (const auto& [alpha, coeff] : terms_) op.terms_.emplace(alpha, coeff.scaled(c));
    return op;
}

DiffOp DiffOp::compose(const DiffOp& o) const {
    if (nvars_ != o.nvars_) throw value_error("variable count mismatch in composition");
    DiffOp out(nvars_);
    for (const auto& [alpha, ca] : terms_) {
        for (const auto& [beta, cb] : o.terms_) {
            // d^alpha (cb g) = sum_{gamma <= alpha} C(alpha,gamma)
            //                  d^(alpha-gamma)(cb) d^gamma g
            for_each_subindex(alpha, [&](const DerivIndex& gamma) {
                Integer mult = 1;
                DerivIndex rest(nvars_), idx(nvars_);
                for (int i = 0; i < nvars_; ++i) {
                    mult *= binomial(alpha[i], gamma[i]);
                    rest[i] = alpha[i] - gamma[i];
                    idx[i] = gamma[i] + beta[i];
                }
                Element coeff = ca * repeated_derivative(cb, rest);
                out.insert(idx, coeff.scaled(RadScalar(Rational(mult))));
            });
        }
    }
    return out;
}

bool DiffOp::operator==(const DiffOp& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

DiffOp DiffOp::dagger() const {
    DiffOp out(nvars_);
    for (const auto& [alpha, coeff] : terms_) {
        if (coeff.gamma() != 0)
            throw value_error("formal adjoint rejects Gaussian coefficients: " + coeff.str());
        // (c d^alpha)^dagger = (-1)^|alpha| d^alpha (c .)
        DiffOp deriv = term(Element::one(nvars_), alpha);
        DiffOp piece = deriv.compose(multiplication(coeff));
        if (order_of(alpha) % 2 != 0) piece = -piece;
        out += piece;
    }
    return out;
}

DiffOp DiffOp::star(const Rational& gamma_pi) const {
    DiffOp out(nvars_);
    for (const auto& [alpha, coeff] : terms_) {
        if (coeff.gamma() != 0)
            throw value_error("weighted adjoint rejects Gaussian coefficients: " + coeff.str());
        // (c d^alpha)^* = prod_i (-d_i - 2*gamma_pi*x_i)^(alpha_i) (c .)
        DiffOp piece = multiplication(coeff);
        for (int i = 1; i <= nvars_; ++i) {
            DiffOp di = -partial(nvars_, i) +
                        coordinate(nvars_, i).scaled(RadScalar(Rational(-2) * gamma_pi));
            for (int k = 0; k < alpha[i - 1]; ++k) piece = di.compose(piece);
        }
        out += piece;
    }
    return out;
}

int DiffOp::max_graded_degree() const {
    if (terms_.empty()) return INT_MIN;
    int dmax = INT_MIN;
    for (const auto& [alpha, coeff] : terms_) {
        int base = prefactor_graded_degree(coeff.mu(), nvars_);
        for (const auto& [d, part] : coeff.poly().homogeneous_split())
            dmax = std::max(dmax, d + base - order_of(alpha));
    }
    return dmax;
}

std::string DiffOp::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest derivative order last, mirroring normal ordering
    for (const auto& [alpha, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << coeff.str();
        for (int i = 0; i < nvars_; ++i) {
            if (alpha[i] == 0) continue;
            os << "*d" << (i + 1);
            if (alpha[i] > 1) os << "^" << alpha[i];
        }
    }
    return os.str();
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) {
    return a.compose(b) - b.compose(a);
}

Element apply_exp_exact(const RadScalar& c, const DiffOp& op, const Element& f,
                        int iteration_bound) {
    Rational rate;
    if (gaussian_shift_rate(op, rate)) {
        RadScalar total = c * RadScalar(rate);
        if (!total.is_rational())
            throw value_error("Gaussian shift rate must be rational, got " + total.str());
        return f.shift_gamma(total.as_rational());
    }
    Element sum = f;
    Element term = f;
    for (int k = 1; k <= iteration_bound; ++k) {
        term = op.apply(term).scaled(c * RadScalar(Rational(1, k)));
        if (term.is_zero()) return sum;
        sum = sum + term;
    }
    throw nontermination_error("operator exponential did not terminate within " +
                                   std::to_string(iteration_bound) + " iterations",
                               term.str());
}

GradedSeries apply_exp_truncated(const RadScalar& c, const DiffOp& op, const Element& f,
                                 int cutoff) {
    return apply_exp_truncated(c, op, homogeneous_components(f, cutoff));
}

GradedSeries apply_exp_truncated(const RadScalar& c, const DiffOp& op, const GradedSeries& s) {
    Rational rate;
    if (gaussian_shift_rate(op, rate)) {
        RadScalar total = c * RadScalar(rate);
        if (!total.is_rational())
            throw value_error("Gaussian shift rate must be rational, got " + total.str());
        GradedSeries out(s.nvars(), s.cutoff());
        if (s.dropped()) out.mark_dropped();
        out.raise_valid_above(s.valid_above());
        for (const auto& [d, comp] : s.components())
            out.add_component(d, comp.shift_gamma(total.as_rational()));
        return out;
    }
    if (op.max_graded_degree() >= 0)
        throw value_error(
            "truncated exponential requires a strictly degree-lowering generator");
    GradedSeries sum = s;
    GradedSeries term = s;
    for (int k = 1; !term.empty(); ++k) {
        if (k > 10000)
            throw nontermination_error("truncated exponential runaway", term.str());
        term = op.apply(term).scaled(c * RadScalar(Rational(1, k)));
        sum = sum + term;
    }
    return sum;
}

DiffOp ad_exponential(const RadScalar& c, const DiffOp& S, const DiffOp& B,
                      int iteration_bound) {
    DiffOp sum = B;
    DiffOp term = B;
    for (int k = 1; k <= iteration_bound; ++k) {
        term = commutator(S, term).scaled(c * RadScalar(Rational(1, k)));
        if (term.is_zero()) return sum;
        sum += term;
    }
    throw nontermination_error("nested-commutator series did not terminate within " +
                                   std::to_string(iteration_bound) + " iterations",
                               term.str());
}

SpanComparison equal_on_span(const DiffOp& a, const DiffOp& b,
                             const std::vector<Element>& span) {
    for (const Element& f : span) {
        Element la = a.apply(f);
        Element lb = b.apply(f);
        if (!(la == lb)) {
            return {false, "on " + f.str() + ": " + la.str() + " vs " + lb.str()};
        }
    }
    return {true, ""};
}

std::vector<Element> monomial_span(int nvars, int degmax) {
    std::vector<Element> out;
    std::vector<Monomial> stack;
    Monomial m(nvars, 0);
    // enumerate exponent vectors in lexicographic order, total degree <= degmax
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == nvars) {
            out.push_back(Element::from_poly(PolyN::monomial(nvars, m, RadScalar(1))));
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            m[pos] = e;
            rec(pos + 1, remaining - e);
        }
        m[pos] = 0;
    };
    rec(0, degmax);
    return out;
}

}
