#include "pbsym/element.hpp"

#include <cmath>
#include <sstream>

namespace pbsym {

PolyN Element::pair_prefactor(int nvars) {
    PolyN p = PolyN::constant(nvars, RadScalar(1));
    for (int i = 1; i <= nvars; ++i) {
        for (int j = i + 1; j <= nvars; ++j) {
            PolyN xi = PolyN::variable(nvars, i);
            PolyN xj = PolyN::variable(nvars, j);
            p *= xi * xi - xj * xj;
        }
    }
    return p;
}

Element::Element(PolyN poly, const Rational& mu, const Rational& gamma)
    : poly_(std::move(poly)), mu_(mu), gamma_(gamma) {
    canonicalize();
}

void Element::canonicalize() {
    if (poly_.is_zero()) {
        mu_ = 0;
        gamma_ = 0;
        return;
    }
    if (nvars() < 2) {
        mu_ = 0;  // the pair product is empty, so the prefactor is 1
        return;
    }
    if (mu_ == 0) return;
    PolyN pref = pair_prefactor(nvars());
    // Divide the prefactor out of poly while it divides exactly, raising mu;
    // then absorb a non-negative integer mu into poly.
    while (!(is_integer(mu_) && mu_ >= 0)) {
        PolyN q(nvars());
        if (!poly_.divide_exact(pref, q)) break;
        poly_ = q;
        mu_ += 1;
    }
    if (is_integer(mu_) && mu_ > 0) {
        long k = mu_.template convert_to<long>();
        for (long i = 0; i < k; ++i) poly_ *= pref;
        mu_ = 0;
    }
}

Element Element::derivative(int i) const {
    if (is_zero()) return *this;
    PolyN dp = poly_.derivative(i);
    PolyN gauss_term(nvars());
    if (gamma_ != 0)
        gauss_term = (RadScalar(Rational(2) * gamma_) * PolyN::variable(nvars(), i)) * poly_;
    if (mu_ == 0) return Element(dp + gauss_term, 0, gamma_);
    PolyN pref = pair_prefactor(nvars());
    PolyN dpref = pref.derivative(i);
    // d/dx_i [p * P^mu * e] = [dp * P + mu * p * dP + 2*gamma*x_i * p * P] * P^(mu-1) * e
    PolyN top = dp * pref + (RadScalar(mu_) * poly_) * dpref + gauss_term * pref;
    return Element(std::move(top), mu_ - 1, gamma_);
}

Element Element::operator-() const {
    Element e = *this;
    e.poly_ = -e.poly_;
    return e;
}

Element Element::operator+(const Element& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (nvars() != o.nvars()) throw value_error("variable count mismatch in element sum");
    if (gamma_ != o.gamma_)
        throw incompatible_sum_error("cannot add elements with Gaussian exponents " +
                                     to_string(gamma_) + " and " + to_string(o.gamma_));
    Rational diff = mu_ - o.mu_;
    if (!is_integer(diff))
        throw incompatible_sum_error("cannot align prefactor powers " + to_string(mu_) +
                                     " and " + to_string(o.mu_));
    // Rescale both polys to the smaller mu and add there.
    const Element& lo = mu_ <= o.mu_ ? *this : o;
    const Element& hi = mu_ <= o.mu_ ? o : *this;
    long k = (hi.mu_ - lo.mu_).template convert_to<long>();
    PolyN pref = pair_prefactor(nvars());
    PolyN shifted = hi.poly_;
    for (long i = 0; i < k; ++i) shifted *= pref;
    return Element(lo.poly_ + shifted, lo.mu_, gamma_);
}

Element Element::operator*(const Element& o) const {
    if (nvars() != o.nvars()) throw value_error("variable count mismatch in element product");
    return Element(poly_ * o.poly_, mu_ + o.mu_, gamma_ + o.gamma_);
}

Element Element::scaled(const RadScalar& c) const {
    if (c.is_zero()) return Element(nvars());
    Element e = *this;
    e.poly_ = e.poly_.scaled(c);
    return e;
}

Element Element::shift_gamma(const Rational& d) const {
    if (is_zero()) return *this;
    Element e = *this;
    e.gamma_ += d;
    return e;
}

bool Element::operator==(const Element& o) const {
    return poly_ == o.poly_ && mu_ == o.mu_ && gamma_ == o.gamma_;
}

int prefactor_graded_degree(const Rational& mu, int nvars) {
    Rational contribution = mu * nvars * (nvars - 1);  // deg(prefactor) = N*(N-1)
    if (!is_integer(contribution))
        throw value_error("prefactor power " + to_string(mu) +
                          " gives a non-integer scaling degree");
    return contribution.template convert_to<int>();
}

int Element::graded_degree() const {
    if (is_zero()) throw value_error("zero element has no scaling degree");
    if (!poly_.is_homogeneous())
        throw value_error("element is not graded-homogeneous: " + str());
    return poly_.total_degree() + prefactor_graded_degree(mu_, nvars());
}

bool Element::is_graded_homogeneous() const {
    if (is_zero()) return false;
    if (!poly_.is_homogeneous()) return false;
    Rational contribution = mu_ * nvars() * (nvars() - 1);
    return is_integer(contribution);
}

bool Element::is_constant() const {
    return is_zero() || (poly_.is_constant() && mu_ == 0 && gamma_ == 0);
}

RadScalar Element::constant_value() const {
    if (is_zero()) return RadScalar();
    if (!is_constant()) throw value_error("element is not a constant: " + str());
    return poly_.constant_value();
}

double Element::eval_poly_part(const std::vector<double>& x) const {
    if (is_zero()) return 0.0;
    double v = poly_.eval(x);
    if (mu_ != 0) {
        double pref = pair_prefactor(nvars()).eval(x);
        if (is_integer(mu_)) {
            long k = mu_.template convert_to<long>();
            double pk = 1.0;
            for (long i = 0; i < (k > 0 ? k : -k); ++i) pk *= pref;
            v *= k > 0 ? pk : 1.0 / pk;
        } else {
            // non-integer powers follow the |.|^mu measure convention
            v *= std::pow(std::abs(pref), to_double(mu_));
        }
    }
    return v;
}

double Element::eval(const std::vector<double>& x) const {
    double v = eval_poly_part(x);
    if (gamma_ != 0 && v != 0.0) {
        double x2 = 0.0;
        for (double xi : x) x2 += xi * xi;
        v *= std::exp(to_double(gamma_) * x2);
    }
    return v;
}

std::string Element::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "(" << poly_.str() << ")";
    if (mu_ != 0) os << "*Pref^(" << to_string(mu_) << ")";
    if (gamma_ != 0) os << "*exp(" << to_string(gamma_) << "*X2)";
    return os.str();
}

Element symmetrize_d2(const Element& f) {
    if (f.nvars() != 2) throw value_error("symmetrization is defined for two variables");
    if (f.is_zero()) return f;
    if (!is_integer(f.mu()))
        throw value_error("symmetrization needs an integer prefactor power");
    long mu = f.mu().template convert_to<long>();
    // Group elements: identity, swap, double sign flip, swap + flip.
    // The prefactor x1^2 - x2^2 changes sign under the swap, contributing
    // (-1)^mu; the sign flip leaves it (and the Gaussian) unchanged.
    auto transform = [&](bool swap, bool flip) {
        PolyN out(2);
        for (const auto& [m, c] : f.poly().terms()) {
            Monomial t = swap ? Monomial{m[1], m[0]} : m;
            RadScalar coeff = c;
            if (flip && (t[0] + t[1]) % 2 != 0) coeff = -coeff;
            if (swap && mu % 2 != 0) coeff = -coeff;
            out += PolyN::monomial(2, t, coeff);
        }
        return Element(out, f.mu(), f.gamma());
    };
    Element sum = transform(false, false) + transform(true, false) +
                  transform(false, true) + transform(true, true);
    return sum.scaled(RadScalar(Rational(1, 4)));
}

}
