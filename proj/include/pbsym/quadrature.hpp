#pragma once

#include <vector>

namespace pbsym {

// Nodes and weights for integration against exp(-x^2) on the real line:
//     integral f(x) exp(-x^2) dx  ~=  sum_i weights[i] * f(nodes[i]),
// exact for polynomials of degree < 2 * order.
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss rule for the exp(-x^2) weight, computed from the orthonormal
// three-term recurrence with bisection bracketing (roots interlace order by
// order) and Newton polishing; weights are Christoffel numbers.
QuadRule gauss_hermite(int order);

}
