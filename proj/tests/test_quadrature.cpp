#include "doctest.h"

#include "hzfem/quadrature.hpp"

#include <cmath>

using namespace hzfem;

namespace {

// Closed form: int_T x^a y^b = a! b! / (a+b+2)! = 1 / (C(a+b,a) (a+b+1) (a+b+2)).
double triangle_monomial_integral(int a, int b) {
    double binom = 1.0;
    for (int i = 1; i <= a; ++i) binom *= static_cast<double>(a + b - a + i) / i;
    return 1.0 / (binom * (a + b + 1) * (a + b + 2));
}

long double integrate_monomial(const QuadratureRule& r, int a, int b) {
    long double s = 0.0L;
    for (int q = 0; q < r.size(); ++q)
        s += static_cast<long double>(r.weights[q]) * std::pow(r.points[q].x(), a) *
             std::pow(r.points[q].y(), b);
    return s;
}

}  // namespace

TEST_CASE("degree-1 triangle rule is the centroid rule") {
    const auto r = triangle_rule(1);
    REQUIRE(r.size() == 1);
    CHECK(r.points[0].x() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(r.points[0].y() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(r.weights[0] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("triangle rules integrate monomials to the factorial closed form") {
    for (int degree : {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 16, 20, 25, 30}) {
        const auto r = triangle_rule(degree);
        REQUIRE(r.exact_degree >= degree);
        for (int a = 0; a + 0 <= degree; ++a)
            for (int b = 0; a + b <= degree; ++b) {
                const double exact = triangle_monomial_integral(a, b);
                const double got = static_cast<double>(integrate_monomial(r, a, b));
                CHECK(std::abs(got - exact) <= 1e-14 * std::abs(exact));
            }
    }
}

TEST_CASE("triangle rule weights sum to the reference area") {
    for (int degree = 0; degree <= 30; ++degree) {
        const auto r = triangle_rule(degree);
        long double s = 0.0L;
        for (double w : r.weights) s += w;
        CHECK(std::abs(static_cast<double>(s) - 0.5) <= 1e-14);
        for (const auto& p : r.points) {
            CHECK(p.x() >= -1e-15);
            CHECK(p.y() >= -1e-15);
            CHECK(p.x() + p.y() <= 1.0 + 1e-15);
        }
    }
}

TEST_CASE("degree-1 edge rule is the midpoint rule") {
    const auto r = edge_rule(1);
    REQUIRE(r.size() == 1);
    CHECK(r.points[0].x() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("edge rules integrate t^a = 1/(a+1)") {
    for (int degree : {0, 1, 2, 3, 5, 8, 13, 21, 30}) {
        const auto r = edge_rule(degree);
        for (int a = 0; a <= degree; ++a) {
            long double s = 0.0L;
            for (int q = 0; q < r.size(); ++q)
                s += static_cast<long double>(r.weights[q]) * std::pow(r.points[q].x(), a);
            const double exact = 1.0 / (a + 1);
            CHECK(std::abs(static_cast<double>(s) - exact) <= 1e-14 * exact);
        }
    }
}

TEST_CASE("n-point edge rule reports exact degree 2n-1") {
    for (int degree : {0, 1, 2, 3, 7, 10}) {
        const auto r = edge_rule(degree);
        CHECK(r.exact_degree == 2 * r.size() - 1);
        CHECK(r.exact_degree >= degree);
    }
}
