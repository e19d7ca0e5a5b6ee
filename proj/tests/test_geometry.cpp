#include "doctest.h"

#include "hzfem/geometry.hpp"

#include <cmath>
#include <random>

using namespace hzfem;

TEST_CASE("builtin chart evaluations") {
    const auto circle = make_builtin_chart("circle");
    CHECK((circle.eval(0.0) - Vec2(1, 0)).norm() <= 1e-15);
    CHECK((circle.eval(M_PI) - Vec2(-1, 0)).norm() <= 1e-12);
    CHECK((circle.derivative(M_PI / 2) - Vec2(-1, 0)).norm() <= 1e-12);

    const auto leaf = make_builtin_chart("three_leaf");
    CHECK((leaf.eval(0.0) - Vec2(1.4, 0)).norm() <= 1e-15);
    CHECK((leaf.eval(M_PI / 2) - Vec2(0, 1)).norm() <= 1e-12);

    CHECK_THROWS_AS(make_builtin_chart("ellipse"), Error);
}

TEST_CASE("chart derivative matches central finite differences") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * M_PI);
    for (const char* name : {"circle", "three_leaf"}) {
        const auto chart = make_builtin_chart(name);
        for (int i = 0; i < 100; ++i) {
            const double t = uni(rng);
            const double h = 1e-6;
            const Vec2 fd = (chart.eval(t + h) - chart.eval(t - h)) / (2.0 * h);
            const Vec2 d = chart.derivative(t);
            CHECK((fd - d).norm() <= 1e-6 * d.norm());
            CHECK(d.norm() > 0.0);  // regular curve
        }
    }
}

TEST_CASE("projection onto the circle from symmetric points") {
    const auto circle = make_builtin_chart("circle");
    auto p = project_to_boundary(circle, Vec2(2.0, 0.0));
    CHECK((p.x - Vec2(1, 0)).norm() <= 1e-12);
    CHECK(std::min(p.t, 2.0 * M_PI - p.t) <= 1e-10);

    p = project_to_boundary(circle, Vec2(0.0, 0.5));
    CHECK((p.x - Vec2(0, 1)).norm() <= 1e-12);
    CHECK(std::abs(p.t - M_PI / 2) <= 1e-10);
}

TEST_CASE("projection is idempotent on chart points") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * M_PI);
    for (const char* name : {"circle", "three_leaf"}) {
        const auto chart = make_builtin_chart(name);
        for (int i = 0; i < 50; ++i) {
            const double t = uni(rng);
            const auto p = project_to_boundary(chart, chart.eval(t), t);
            double dt = std::abs(p.t - chart.reduce(t));
            dt = std::min(dt, chart.period() - dt);
            CHECK(dt <= 1e-10);
        }
    }
}

TEST_CASE("three-leaf projection agrees with a dense parameter scan") {
    const auto leaf = make_builtin_chart("three_leaf");
    const Vec2 x(1.5, 0.0);
    const auto p = project_to_boundary(leaf, x, 0.1);

    const int n = 100000;
    double best_t = 0.0, best_d = 1e300;
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * M_PI * i / n;
        const double d = (leaf.eval(t) - x).squaredNorm();
        if (d < best_d) {
            best_d = d;
            best_t = t;
        }
    }
    double dt = std::abs(p.t - best_t);
    dt = std::min(dt, 2.0 * M_PI - dt);
    CHECK(dt <= 1e-4);  // scan resolution is 2*pi/1e5
    CHECK(std::min(p.t, 2.0 * M_PI - p.t) <= 1e-6);
}

TEST_CASE("projection without a hint finds the global nearest point") {
    const auto leaf = make_builtin_chart("three_leaf");
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * M_PI);
    for (int i = 0; i < 20; ++i) {
        const double t = uni(rng);
        const Vec2 on = leaf.eval(t);
        const Vec2 near = on * 1.001;  // small outward offset
        const auto p = project_to_boundary(leaf, near);
        CHECK((p.x - on).norm() <= 2e-3);
    }
}
