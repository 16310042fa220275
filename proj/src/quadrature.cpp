#include "pbsym/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "pbsym/errors.hpp"

namespace pbsym {

namespace {

// Orthonormal polynomials for the exp(-x^2) weight:
//   p_0 = pi^{-1/4},   p_{k+1} = x sqrt(2/(k+1)) p_k - sqrt(k/(k+1)) p_{k-1},
// with p_n' = sqrt(2n) p_{n-1}. Returns (p_n(x), p_{n-1}(x)).
std::pair<double, double> eval_pair(int n, double x) {
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25);
    for (int k = 0; k < n; ++k) {
        double next = x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(double(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

double eval_p(int n, double x) { return eval_pair(n, x).first; }

// One root of p_n inside (lo, hi), where the endpoints bracket a sign change.
double refine_root(int n, double lo, double hi) {
    double flo = eval_p(n, lo);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = eval_p(n, mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 50; ++it) {
        auto [pn, pn1] = eval_pair(n, x);
        double deriv = std::sqrt(2.0 * n) * pn1;
        if (deriv == 0.0) break;
        double step = pn / deriv;
        x -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
    }
    return x;
}

}  // namespace

QuadRule gauss_hermite(int order) {
    if (order < 1) throw value_error("quadrature order must be positive");
    // Roots of successive orders interlace; grow the root list order by order,
    // using the previous roots plus the outer bound sqrt(2n+1) as brackets.
    std::vector<double> roots{0.0};
    for (int n = 2; n <= order; ++n) {
        double bound = std::sqrt(2.0 * n + 1.0);
        std::vector<double> brackets;
        brackets.push_back(-bound);
        brackets.insert(brackets.end(), roots.begin(), roots.end());
        brackets.push_back(bound);
        std::vector<double> next;
        next.reserve(n);
        for (int i = 0; i < n; ++i) next.push_back(refine_root(n, brackets[i], brackets[i + 1]));
        roots = std::move(next);
    }

    QuadRule rule;
    rule.nodes = roots;
    rule.weights.reserve(order);
    for (double x : roots) {
        // Christoffel number: 1 / sum_{k<n} p_k(x)^2.
        double prev = 0.0;
        double cur = std::pow(std::numbers::pi, -0.25);
        double s = cur * cur;
        for (int k = 0; k + 1 < order; ++k) {
            double next =
                x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(double(k) / (k + 1)) * prev;
            prev = cur;
            cur = next;
            s += cur * cur;
        }
        rule.weights.push_back(1.0 / s);
    }
    return rule;
}

}
