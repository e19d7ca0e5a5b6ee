#include "hzfem/quadrature.hpp"

#include <cmath>

namespace hzfem {

void gauss_legendre_01(int n, std::vector<double>& points, std::vector<double>& weights) {
    require(n >= 1, "gauss_legendre_01: n must be >= 1");
    points.resize(n);
    weights.resize(n);
    // Newton iteration on P_n over [-1,1], then map to [0,1].
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            if (n == 1) p1 = x;
            for (int j = 1; j < n; ++j) {
                const double p2 = ((2 * j + 1) * x * p1 - j * p0) / (j + 1);
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        points[n - 1 - i] = 0.5 * (x + 1.0);
        weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * pp * pp);
    }
}

QuadratureRule edge_rule(int degree) {
    require(degree >= 0, "edge_rule: negative degree");
    const int n = degree / 2 + 1;  // 2n-1 >= degree
    std::vector<double> p, w;
    gauss_legendre_01(n, p, w);
    QuadratureRule rule;
    rule.exact_degree = 2 * n - 1;
    for (int i = 0; i < n; ++i) {
        rule.points.emplace_back(p[i], 0.0);
        rule.weights.push_back(w[i]);
    }
    return rule;
}

namespace {

void add_orbit1(QuadratureRule& r, double w) {  // centroid
    r.points.emplace_back(1.0 / 3.0, 1.0 / 3.0);
    r.weights.push_back(w);
}

void add_orbit3(QuadratureRule& r, double a, double w) {  // bary (a,a,1-2a)
    const double c = 1.0 - 2.0 * a;
    // reference coords (x,y) = (bary1, bary2) with bary0 = 1-x-y
    r.points.emplace_back(a, c);
    r.points.emplace_back(c, a);
    r.points.emplace_back(a, a);
    for (int i = 0; i < 3; ++i) r.weights.push_back(w);
}

void add_orbit6(QuadratureRule& r, double a, double b, double w) {  // bary (a,b,1-a-b)
    const double c = 1.0 - a - b;
    const double xs[6] = {b, c, a, c, a, b};
    const double ys[6] = {c, b, c, a, b, a};
    for (int i = 0; i < 6; ++i) {
        r.points.emplace_back(xs[i], ys[i]);
        r.weights.push_back(w);
    }
}

// Symmetric positive-weight interior rules (weights sum to 1/2).
QuadratureRule tabulated_triangle_rule(int degree) {
    QuadratureRule r;
    switch (degree) {
        case 0:
        case 1:
            add_orbit1(r, 0.5);
            r.exact_degree = 1;
            break;
        case 2:
            add_orbit3(r, 1.0 / 6.0, 1.0 / 6.0);
            r.exact_degree = 2;
            break;
        case 3:
        case 4:
            add_orbit3(r, 0.445948490915965, 0.111690794839005);
            add_orbit3(r, 0.091576213509771, 0.054975871827661);
            r.exact_degree = 4;
            break;
        case 5:
            add_orbit1(r, 0.1125);
            add_orbit3(r, 0.470142064105115, 0.066197076394253);
            add_orbit3(r, 0.101286507323456, 0.062969590272414);
            r.exact_degree = 5;
            break;
        case 6:
            add_orbit3(r, 0.063089014491502, 0.025422453185103);
            add_orbit3(r, 0.249286745170910, 0.058393137863189);
            add_orbit6(r, 0.053145049844816, 0.310352451033785, 0.041425537809187);
            r.exact_degree = 6;
            break;
        case 7:
        case 8:
            add_orbit1(r, 0.072157803838894);
            add_orbit3(r, 0.459292588292723, 0.047545817133642);
            add_orbit3(r, 0.170569307751760, 0.051608685267359);
            add_orbit3(r, 0.050547228317031, 0.016229248811599);
            add_orbit6(r, 0.008394777409958, 0.263112829634638, 0.013615157087217);
            r.exact_degree = 8;
            break;
        default:
            throw Error("tabulated_triangle_rule: no table for this degree");
    }
    return r;
}

// Collapsed tensor-product Gauss rule via (u, v(1-u)); exact for any degree.
QuadratureRule duffy_triangle_rule(int degree) {
    const int n = (degree + 2) / 2 + 1;  // 2n-1 >= degree+1
    std::vector<double> p, w;
    gauss_legendre_01(n, p, w);
    QuadratureRule r;
    r.exact_degree = degree;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double u = p[i], v = p[j];
            r.points.emplace_back(u, v * (1.0 - u));
            r.weights.push_back(w[i] * w[j] * (1.0 - u));
        }
    return r;
}

}  // namespace

QuadratureRule triangle_rule(int degree) {
    require(degree >= 0, "triangle_rule: negative degree");
    require(degree <= 60, "triangle_rule: degree beyond supported range");
    if (degree <= 8) return tabulated_triangle_rule(degree);
    return duffy_triangle_rule(degree);
}

}  // namespace hzfem
