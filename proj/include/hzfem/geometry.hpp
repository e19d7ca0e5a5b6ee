#pragma once

#include "hzfem/types.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hzfem {

/// One smooth parametric piece of a boundary curve.
struct ChartSegment {
    double t_begin = 0.0;
    double t_end = 0.0;
    std::function<Vec2(double)> eval;
    std::function<Vec2(double)> derivative;
};

/// Parametric description of a domain boundary. Charts are immutable after
/// construction and safe to share across workers.
class BoundaryChart {
public:
    BoundaryChart(std::vector<ChartSegment> segments, bool closed);

    bool closed() const { return closed_; }
    double period() const { return period_; }

    /// Reduce a parameter modulo the period (closed charts); validate range
    /// for open charts.
    double reduce(double t) const;

    Vec2 eval(double t) const;
    Vec2 derivative(double t) const;

private:
    const ChartSegment& segment_for(double t) const;

    std::vector<ChartSegment> segments_;
    bool closed_;
    double period_;
};

/// A parameter together with its image on the chart.
struct ChartPoint {
    double t = 0.0;
    Vec2 x = Vec2::Zero();
};

/// Built-in charts: "circle" (unit circle) and "three_leaf" (a smooth
/// non-convex three-lobed curve). Both are closed with period 2*pi.
BoundaryChart make_builtin_chart(const std::string& name);

/// Parameter of the locally nearest chart point to x. With a hint, a damped
/// Newton iteration on the normal equation; without one, a dense scan
/// followed by golden-section bracketing and the same Newton polish.
/// Converged when |(phi(t)-x).phi'(t)| <= 1e-12 |phi'(t)|^2.
ChartPoint project_to_boundary(const BoundaryChart& chart, const Vec2& x,
                               std::optional<double> hint = std::nullopt);

}  // namespace hzfem
