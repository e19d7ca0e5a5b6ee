#pragma once

#include "hzfem/types.hpp"

#include <array>
#include <vector>

namespace hzfem {

/// Number of bivariate monomials of total degree <= p.
inline int poly_dim(int p) { return (p + 1) * (p + 2) / 2; }

/// Exponent pairs (a,b) with a+b <= p in graded lexicographic order.
std::vector<std::array<int, 2>> monomial_exponents(int p);

/// Monomials ((x-c)/s)^a ((y-c)/s)^b over a local frame; the scaling keeps
/// values O(1) on elements of diameter ~ s.
class ScaledMonomials {
public:
    ScaledMonomials(int degree, const Vec2& center, double scale);

    int size() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }

    /// Values at one point, appended into row `row` of V (n_pts x n).
    void values_row(const Vec2& x, Eigen::MatrixXd& V, int row) const;
    /// Values and physical gradients at one point.
    void values_grads_row(const Vec2& x, Eigen::MatrixXd& V, Eigen::MatrixXd& Gx,
                          Eigen::MatrixXd& Gy, int row) const;

    Eigen::MatrixXd values(const std::vector<Vec2>& pts) const;

private:
    int degree_;
    Vec2 center_;
    double scale_;
    std::vector<std::array<int, 2>> exps_;
};

/// The monomial frame used for all "reference monomial" coefficient tables
/// below (centered at the reference centroid, unit scale).
inline ScaledMonomials reference_monomials(int degree) {
    return ScaledMonomials(degree, Vec2(1.0 / 3.0, 1.0 / 3.0), 1.0);
}

/// Shifted Legendre polynomials on [0,1]: L_0 = 1, L_1 = 2s-1, ...
/// Orthogonal with \int_0^1 L_i L_j = delta_ij / (2i+1).
void shifted_legendre(int max_degree, double s, double* out);
std::vector<double> shifted_legendre(int max_degree, double s);

/// Principal-lattice nodes of the reference triangle for degree m, ordered
/// so the first three are the vertices (0,0), (1,0), (0,1), then the edge
/// interiors (edges (0,1), (1,2), (2,0), each walked from its first vertex),
/// then the interior nodes.
std::vector<Vec2> lattice_nodes(int m);

/// Nodes of lattice_nodes(m) lying in the interior of edge (a,b), in order of
/// increasing barycentric weight toward b. Size m-1.
std::vector<int> lattice_edge_nodes(int m, int a, int b);

/// Lagrange basis on the degree-m principal lattice of the reference
/// triangle, expressed as coefficients over reference monomials:
/// column j holds the monomial coefficients of the basis function of node j.
Eigen::MatrixXd lagrange_coefficients(int m);

/// Coefficients (over reference monomials, graded order) of an L2(ref
/// triangle)-orthonormal modal basis of P_degree. Column per mode.
Eigen::MatrixXd orthonormal_modes(int degree);

}  // namespace hzfem
