#pragma once

#include "hzfem/types.hpp"

#include <vector>

namespace hzfem {

/// Quadrature rule on the reference triangle {x,y >= 0, x+y <= 1} or on the
/// reference edge [0,1]. Triangle weights sum to 1/2, edge weights to 1.
struct QuadratureRule {
    std::vector<Vec2> points;   // edge rules store (s, 0)
    std::vector<double> weights;
    int exact_degree = 0;

    int size() const { return static_cast<int>(points.size()); }
};

/// Rule exact on all bivariate monomials of total degree <= degree.
/// Symmetric tabulated rules for low degrees, collapsed tensor Gauss above.
QuadratureRule triangle_rule(int degree);

/// Gauss-Legendre rule on [0,1] exact to the requested degree.
QuadratureRule edge_rule(int degree);

/// Gauss-Legendre points/weights on [0,1] with n points (exact degree 2n-1).
void gauss_legendre_01(int n, std::vector<double>& points, std::vector<double>& weights);

}  // namespace hzfem
