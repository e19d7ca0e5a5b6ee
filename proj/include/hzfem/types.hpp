#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace hzfem {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Error type thrown by all library entry points.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

/// Symmetric 2x2 tensor stored as (xx, xy, yy). The off-diagonal entry is
/// stored once, so tau_12 == tau_21 holds identically.
struct SymMat2 {
    double xx = 0.0, xy = 0.0, yy = 0.0;

    double trace() const { return xx + yy; }

    SymMat2 operator+(const SymMat2& o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
    SymMat2 operator-(const SymMat2& o) const { return {xx - o.xx, xy - o.xy, yy - o.yy}; }
    SymMat2 operator*(double a) const { return {a * xx, a * xy, a * yy}; }

    /// Frobenius inner product sigma : tau (off-diagonal counted twice).
    double ddot(const SymMat2& o) const { return xx * o.xx + 2.0 * xy * o.xy + yy * o.yy; }

    double norm() const { return std::sqrt(ddot(*this)); }

    /// Matrix-vector product tau * v.
    Vec2 apply(const Vec2& v) const { return {xx * v.x() + xy * v.y(), xy * v.x() + yy * v.y()}; }

    static SymMat2 identity() { return {1.0, 0.0, 1.0}; }

    /// Rank-one tensor t t^T.
    static SymMat2 outer(const Vec2& t) { return {t.x() * t.x(), t.x() * t.y(), t.y() * t.y()}; }
};

inline SymMat2 operator*(double a, const SymMat2& s) { return s * a; }

/// Rotate a vector by -90 degrees: (x,y) -> (y,-x).
inline Vec2 rotate_cw(const Vec2& v) { return {v.y(), -v.x()}; }

}  // namespace hzfem
