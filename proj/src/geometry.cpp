#include "hzfem/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace hzfem {

BoundaryChart::BoundaryChart(std::vector<ChartSegment> segments, bool closed)
    : segments_(std::move(segments)), closed_(closed) {
    require(!segments_.empty(), "BoundaryChart: no segments");
    double length = 0.0;
    for (const auto& s : segments_) {
        require(s.t_end > s.t_begin, "BoundaryChart: empty segment range");
        require(static_cast<bool>(s.eval) && static_cast<bool>(s.derivative),
                "BoundaryChart: segment missing eval or derivative");
        length += s.t_end - s.t_begin;
    }
    period_ = length;
}

double BoundaryChart::reduce(double t) const {
    const double t0 = segments_.front().t_begin;
    if (closed_) {
        double r = std::fmod(t - t0, period_);
        if (r < 0.0) r += period_;
        return t0 + r;
    }
    require(t >= t0 - 1e-12 && t <= segments_.back().t_end + 1e-12,
            "BoundaryChart: parameter outside range of open chart");
    return t;
}

const ChartSegment& BoundaryChart::segment_for(double t) const {
    for (const auto& s : segments_)
        if (t <= s.t_end) return s;
    return segments_.back();
}

Vec2 BoundaryChart::eval(double t) const {
    const double r = reduce(t);
    return segment_for(r).eval(r);
}

Vec2 BoundaryChart::derivative(double t) const {
    const double r = reduce(t);
    return segment_for(r).derivative(r);
}

BoundaryChart make_builtin_chart(const std::string& name) {
    const double two_pi = 2.0 * M_PI;
    if (name == "circle") {
        ChartSegment seg;
        seg.t_begin = 0.0;
        seg.t_end = two_pi;
        seg.eval = [](double t) { return Vec2(std::cos(t), std::sin(t)); };
        seg.derivative = [](double t) { return Vec2(-std::sin(t), std::cos(t)); };
        return BoundaryChart({seg}, true);
    }
    if (name == "three_leaf") {
        ChartSegment seg;
        seg.t_begin = 0.0;
        seg.t_end = two_pi;
        seg.eval = [](double t) {
            const double c3 = std::cos(3.0 * t);
            const double x = (1.0 + 0.4 * c3) * std::cos(t);
            const double y = (1.0 + (0.4 + 0.22 * std::sin(t)) * c3) * std::sin(t);
            return Vec2(x, y);
        };
        seg.derivative = [](double t) {
            const double s = std::sin(t), c = std::cos(t);
            const double s3 = std::sin(3.0 * t), c3 = std::cos(3.0 * t);
            const double dx = -1.2 * s3 * c - (1.0 + 0.4 * c3) * s;
            const double amp = 0.4 + 0.22 * s;
            const double damp = 0.22 * c * c3 - 3.0 * amp * s3;
            const double dy = damp * s + (1.0 + amp * c3) * c;
            return Vec2(dx, dy);
        };
        return BoundaryChart({seg}, true);
    }
    throw Error("make_builtin_chart: unknown chart name '" + name + "'");
}

namespace {

double normal_residual(const BoundaryChart& chart, const Vec2& x, double t, Vec2* phi = nullptr) {
    const Vec2 p = chart.eval(t);
    const Vec2 d = chart.derivative(t);
    if (phi) *phi = p;
    return (p - x).dot(d);
}

bool converged(const BoundaryChart& chart, const Vec2& x, double t) {
    const Vec2 d = chart.derivative(t);
    return std::abs(normal_residual(chart, x, t)) <= 1e-12 * d.squaredNorm();
}

/// Damped Newton on g(t) = (phi(t)-x).phi'(t); g' by central differences.
bool newton_polish(const BoundaryChart& chart, const Vec2& x, double& t) {
    const double fd = 1e-6;
    for (int it = 0; it < 60; ++it) {
        if (converged(chart, x, t)) return true;
        const double g = normal_residual(chart, x, t);
        const double gp =
            (normal_residual(chart, x, t + fd) - normal_residual(chart, x, t - fd)) / (2.0 * fd);
        if (gp == 0.0) return false;
        double step = -g / gp;
        // Keep steps inside a sane trust region of one period.
        const double cap = 0.25 * chart.period();
        if (std::abs(step) > cap) step = (step > 0 ? cap : -cap);
        double tn = t;
        double damp = 1.0;
        const double dist0 = (chart.eval(t) - x).squaredNorm();
        for (int k = 0; k < 30; ++k) {
            tn = t + damp * step;
            if ((chart.eval(tn) - x).squaredNorm() <= dist0 || std::abs(damp * step) < 1e-15) break;
            damp *= 0.5;
        }
        if (tn == t) return converged(chart, x, t);
        t = tn;
    }
    return converged(chart, x, t);
}

double golden_section(const BoundaryChart& chart, const Vec2& x, double a, double b) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = (chart.eval(c) - x).squaredNorm();
    double fd = (chart.eval(d) - x).squaredNorm();
    for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = (chart.eval(c) - x).squaredNorm();
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = (chart.eval(d) - x).squaredNorm();
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

ChartPoint project_to_boundary(const BoundaryChart& chart, const Vec2& x,
                               std::optional<double> hint) {
    double t;
    if (hint) {
        t = chart.reduce(*hint);
        if (!newton_polish(chart, x, t)) {
            // Fall back to a local golden-section bracket around the hint.
            const double w = 0.05 * chart.period();
            t = golden_section(chart, x, chart.reduce(*hint) - w, chart.reduce(*hint) + w);
            newton_polish(chart, x, t);
        }
    } else {
        // Dense scan, then bracket the best sample.
        const int n = 4096;
        double best = 0.0, best_d = std::numeric_limits<double>::max();
        for (int i = 0; i < n; ++i) {
            const double ti = chart.period() * i / n;
            const double di = (chart.eval(ti) - x).squaredNorm();
            if (di < best_d) {
                best_d = di;
                best = ti;
            }
        }
        const double w = chart.period() / n;
        t = golden_section(chart, x, best - w, best + w);
        newton_polish(chart, x, t);
    }
    if (!converged(chart, x, t)) {
        std::ostringstream os;
        os << "project_to_boundary: no convergence near t=" << t << " for point (" << x.x() << ", "
           << x.y() << ")";
        throw Error(os.str());
    }
    t = chart.reduce(t);
    return ChartPoint{t, chart.eval(t)};
}

}  // namespace hzfem
