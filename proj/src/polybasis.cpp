#include "hzfem/polybasis.hpp"

#include "hzfem/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace hzfem {

std::vector<std::array<int, 2>> monomial_exponents(int p) {
    std::vector<std::array<int, 2>> exps;
    exps.reserve(poly_dim(p));
    for (int total = 0; total <= p; ++total)
        for (int a = total; a >= 0; --a) exps.push_back({a, total - a});
    return exps;
}

ScaledMonomials::ScaledMonomials(int degree, const Vec2& center, double scale)
    : degree_(degree), center_(center), scale_(scale), exps_(monomial_exponents(degree)) {
    require(degree >= 0, "ScaledMonomials: negative degree");
    require(scale > 0.0, "ScaledMonomials: nonpositive scale");
}

namespace {
inline double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}
}  // namespace

void ScaledMonomials::values_row(const Vec2& x, Eigen::MatrixXd& V, int row) const {
    const double X = (x.x() - center_.x()) / scale_;
    const double Y = (x.y() - center_.y()) / scale_;
    for (int i = 0; i < size(); ++i) V(row, i) = ipow(X, exps_[i][0]) * ipow(Y, exps_[i][1]);
}

void ScaledMonomials::values_grads_row(const Vec2& x, Eigen::MatrixXd& V, Eigen::MatrixXd& Gx,
                                       Eigen::MatrixXd& Gy, int row) const {
    const double X = (x.x() - center_.x()) / scale_;
    const double Y = (x.y() - center_.y()) / scale_;
    for (int i = 0; i < size(); ++i) {
        const int a = exps_[i][0], b = exps_[i][1];
        const double xa = ipow(X, a), yb = ipow(Y, b);
        V(row, i) = xa * yb;
        Gx(row, i) = (a == 0) ? 0.0 : a * ipow(X, a - 1) * yb / scale_;
        Gy(row, i) = (b == 0) ? 0.0 : b * xa * ipow(Y, b - 1) / scale_;
    }
}

Eigen::MatrixXd ScaledMonomials::values(const std::vector<Vec2>& pts) const {
    Eigen::MatrixXd V(pts.size(), size());
    for (int q = 0; q < static_cast<int>(pts.size()); ++q) values_row(pts[q], V, q);
    return V;
}

void shifted_legendre(int max_degree, double s, double* out) {
    const double t = 2.0 * s - 1.0;
    out[0] = 1.0;
    if (max_degree >= 1) out[1] = t;
    for (int j = 1; j < max_degree; ++j)
        out[j + 1] = ((2 * j + 1) * t * out[j] - j * out[j - 1]) / (j + 1);
}

std::vector<double> shifted_legendre(int max_degree, double s) {
    std::vector<double> v(max_degree + 1);
    shifted_legendre(max_degree, s, v.data());
    return v;
}

std::vector<Vec2> lattice_nodes(int m) {
    require(m >= 1, "lattice_nodes: degree must be >= 1");
    const Vec2 v[3] = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
    std::vector<Vec2> nodes = {v[0], v[1], v[2]};
    const int edge_pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    for (const auto& e : edge_pairs)
        for (int i = 1; i < m; ++i) {
            const double s = static_cast<double>(i) / m;
            nodes.push_back((1.0 - s) * v[e[0]] + s * v[e[1]]);
        }
    for (int i = 1; i < m; ++i)
        for (int j = 1; i + j < m; ++j)
            nodes.push_back(Vec2(static_cast<double>(i) / m, static_cast<double>(j) / m));
    return nodes;
}

std::vector<int> lattice_edge_nodes(int m, int a, int b) {
    const int edge_pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    for (int e = 0; e < 3; ++e) {
        const int off = 3 + e * (m - 1);
        if (edge_pairs[e][0] == a && edge_pairs[e][1] == b) {
            std::vector<int> idx(m - 1);
            for (int i = 0; i < m - 1; ++i) idx[i] = off + i;
            return idx;
        }
        if (edge_pairs[e][0] == b && edge_pairs[e][1] == a) {
            std::vector<int> idx(m - 1);
            for (int i = 0; i < m - 1; ++i) idx[i] = off + (m - 2 - i);
            return idx;
        }
    }
    throw Error("lattice_edge_nodes: not an edge of the reference triangle");
}

Eigen::MatrixXd lagrange_coefficients(int m) {
    const auto nodes = lattice_nodes(m);
    const int n = static_cast<int>(nodes.size());
    ScaledMonomials mono(m, Vec2(1.0 / 3.0, 1.0 / 3.0), 1.0);
    Eigen::MatrixXd V(n, n);
    for (int i = 0; i < n; ++i) mono.values_row(nodes[i], V, i);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(V);
    return lu.inverse();
}

Eigen::MatrixXd orthonormal_modes(int degree) {
    const int n = poly_dim(degree);
    const QuadratureRule rule = triangle_rule(2 * degree + 1);
    ScaledMonomials mono(degree, Vec2(1.0 / 3.0, 1.0 / 3.0), 1.0);
    Eigen::MatrixXd A(rule.size(), n);
    for (int q = 0; q < rule.size(); ++q) mono.values_row(rule.points[q], A, q);
    for (int q = 0; q < rule.size(); ++q) A.row(q) *= std::sqrt(rule.weights[q]);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
    Eigen::MatrixXd R = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
    // Fix diagonal signs so the mode ordering/orientation is deterministic.
    Eigen::VectorXd sign(n);
    for (int i = 0; i < n; ++i) sign(i) = (R(i, i) < 0.0) ? -1.0 : 1.0;
    R = sign.asDiagonal() * R;
    Eigen::MatrixXd coeffs =
        R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(n, n));
    return coeffs;
}

}  // namespace hzfem
