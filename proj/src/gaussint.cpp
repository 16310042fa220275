#include "pbsym/gaussint.hpp"

#include <cmath>

#include "pbsym/quadrature.hpp"

namespace pbsym {

RadScalar inner_product_t(const TSpaceVector& u, const TSpaceVector& v) {
    RadScalar out;
    for (const auto& [index, cu] : u.coords) {
        auto it = v.coords.find(index);
        if (it != v.coords.end()) out += cu * it->second;
    }
    return out;
}

RadScalar gaussian_moment(const Monomial& alpha, const Rational& decay) {
    if (decay <= 0) throw divergent_integral_error("Gaussian moment needs positive decay");
    RadScalar out(1);
    for (int a : alpha) {
        if (a < 0) throw value_error("negative monomial exponent");
        if (a % 2 == 1) return RadScalar();
        unsigned m = static_cast<unsigned>(a / 2);
        Rational c = Rational(double_factorial_odd(m)) / pow_rational(2 * decay, m);
        // sqrt(pi / decay) = pi^{1/2} * sqrt(1 / decay)
        out = out * RadScalar::term(c, 1, 1) * RadScalar::sqrt_of(1 / decay);
    }
    return out;
}

RadScalar inner_product_weighted(const Element& f, const Element& g, const Rational& gamma_pi) {
    if (f.nvars() != g.nvars()) throw value_error("inner product across variable counts");
    Element prod = (f * g).shift_gamma(gamma_pi);
    if (prod.is_zero()) return RadScalar();
    if (prod.mu() != 0) {
        throw value_error("integrand keeps a prefactor power " + to_string(prod.mu()) +
                          ", not exactly integrable: " + prod.str());
    }
    if (prod.gamma() >= 0) {
        throw divergent_integral_error("integrand does not decay: total Gaussian exponent " +
                                       to_string(prod.gamma()));
    }
    Rational decay = -prod.gamma();
    RadScalar out;
    for (const auto& [mono, coeff] : prod.poly().terms())
        out += coeff * gaussian_moment(mono, decay);
    return out;
}

double quad_inner_product(const Element& f, const Element& g, const Rational& gamma_pi,
                          int order) {
    if (f.nvars() != g.nvars()) throw value_error("inner product across variable counts");
    int n = f.nvars();
    if (n < 1) throw value_error("inner product needs at least one variable");
    Rational gamma_tot = f.gamma() + g.gamma() + gamma_pi;
    if (gamma_tot >= 0) {
        throw divergent_integral_error("integrand does not decay: total Gaussian exponent " +
                                       to_string(gamma_tot));
    }
    double b = -to_double(gamma_tot);
    double scale = 1.0 / std::sqrt(b);
    QuadRule rule = gauss_hermite(order);

    // Tensor grid over n axes; substitute x = t / sqrt(b) axis by axis so the
    // combined Gaussian exp(-b X^2) becomes the rule's own weight.
    std::vector<int> idx(n, 0);
    std::vector<double> x(n);
    double total = 0.0;
    while (true) {
        double w = 1.0;
        for (int i = 0; i < n; ++i) {
            w *= rule.weights[idx[i]];
            x[i] = rule.nodes[idx[i]] * scale;
        }
        total += w * f.eval_poly_part(x) * g.eval_poly_part(x);
        int i = 0;
        while (i < n && ++idx[i] == order) idx[i++] = 0;
        if (i == n) break;
    }
    for (int i = 0; i < n; ++i) total *= scale;
    return total;
}

}
