#pragma once

#include <cmath>

namespace hzfem {

/// Second-order truncated Taylor value in two variables: carries the value,
/// the gradient and the (symmetric) Hessian through arithmetic. Used to
/// evaluate manufactured solutions together with all derivatives needed for
/// stress, its gradient and the body force.
struct Jet2 {
    double v = 0.0;
    double dx = 0.0, dy = 0.0;
    double dxx = 0.0, dxy = 0.0, dyy = 0.0;

    static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
    static Jet2 var_x(double x) { return {x, 1, 0, 0, 0, 0}; }
    static Jet2 var_y(double y) { return {y, 0, 1, 0, 0, 0}; }

    Jet2 operator+(const Jet2& o) const {
        return {v + o.v, dx + o.dx, dy + o.dy, dxx + o.dxx, dxy + o.dxy, dyy + o.dyy};
    }
    Jet2 operator-(const Jet2& o) const {
        return {v - o.v, dx - o.dx, dy - o.dy, dxx - o.dxx, dxy - o.dxy, dyy - o.dyy};
    }
    Jet2 operator-() const { return {-v, -dx, -dy, -dxx, -dxy, -dyy}; }

    Jet2 operator*(const Jet2& o) const {
        Jet2 r;
        r.v = v * o.v;
        r.dx = dx * o.v + v * o.dx;
        r.dy = dy * o.v + v * o.dy;
        r.dxx = dxx * o.v + 2.0 * dx * o.dx + v * o.dxx;
        r.dxy = dxy * o.v + dx * o.dy + dy * o.dx + v * o.dxy;
        r.dyy = dyy * o.v + 2.0 * dy * o.dy + v * o.dyy;
        return r;
    }
    Jet2 operator*(double a) const { return {a * v, a * dx, a * dy, a * dxx, a * dxy, a * dyy}; }
    Jet2 operator+(double a) const { return {v + a, dx, dy, dxx, dxy, dyy}; }

    /// Compose with a scalar function given f(v), f'(v), f''(v).
    Jet2 lift(double f, double f1, double f2) const {
        Jet2 r;
        r.v = f;
        r.dx = f1 * dx;
        r.dy = f1 * dy;
        r.dxx = f2 * dx * dx + f1 * dxx;
        r.dxy = f2 * dx * dy + f1 * dxy;
        r.dyy = f2 * dy * dy + f1 * dyy;
        return r;
    }
};

inline Jet2 operator*(double a, const Jet2& j) { return j * a; }

inline Jet2 exp(const Jet2& j) {
    const double e = std::exp(j.v);
    return j.lift(e, e, e);
}
inline Jet2 sin(const Jet2& j) {
    const double s = std::sin(j.v), c = std::cos(j.v);
    return j.lift(s, c, -s);
}
inline Jet2 cos(const Jet2& j) {
    const double s = std::sin(j.v), c = std::cos(j.v);
    return j.lift(c, -s, -c);
}

}  // namespace hzfem
