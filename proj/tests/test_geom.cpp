#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "cruxgeom/geom.hpp"
#include "cruxgeom/numerics.hpp"

using namespace cruxgeom;

namespace {

// Independent root finder for |p + t*u - c|^2 = r^2: bisection on a bracket
// known to straddle the circle. Deliberately avoids the closed form under test.
double bisect_root(const Circle& circle, Vec2 p, Vec2 u, double lo, double hi) {
    const auto g = [&](double t) {
        return (p + t * u - circle.center).norm_squared() - circle.radius * circle.radius;
    };
    REQUIRE(g(lo) * g(hi) < 0.0);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (g(lo) * g(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("horizontal line through (0.5, 0) meets the unit circle at -1.5 and 0.5") {
    const auto roots = line_circle_roots(Circle::unit(), {0.5, 0.0}, {1.0, 0.0});
    CHECK(roots.t_minus == Catch::Approx(-1.5).margin(1e-15));
    CHECK(roots.t_plus == Catch::Approx(0.5).margin(1e-15));
}

TEST_CASE("vertical line through (0.5, 0) meets the unit circle at +-sqrt(3)/2") {
    const auto roots = line_circle_roots(Circle::unit(), {0.5, 0.0}, {0.0, 1.0});
    CHECK(roots.t_plus == Catch::Approx(0.8660254037844386).margin(1e-15));
    CHECK(roots.t_minus == Catch::Approx(-0.8660254037844386).margin(1e-15));
}

TEST_CASE("closed-form roots agree with a bisection oracle") {
    const Circle circle({0.3, -1.2}, 2.5);
    UniformRng rng(2024);
    for (int i = 0; i < 50; ++i) {
        Vec2 p;
        do {
            p = {circle.center.x + rng.next(-2.4, 2.4), circle.center.y + rng.next(-2.4, 2.4)};
        } while (!circle.strictly_inside(p));
        const Vec2 u = unit_vector(rng.next(0.0, 2.0 * std::numbers::pi));
        const auto roots = line_circle_roots(circle, p, u);
        const double span = 2.0 * circle.radius;
        CHECK(roots.t_plus == Catch::Approx(bisect_root(circle, p, u, 0.0, span)).margin(1e-10));
        CHECK(roots.t_minus == Catch::Approx(bisect_root(circle, p, u, -span, 0.0)).margin(1e-10));
    }
}

TEST_CASE("roots straddle zero, land on the circle, and satisfy Vieta's product") {
    const Circle circle = Circle::unit();
    UniformRng rng(7);
    for (int i = 0; i < 1000; ++i) {
        Vec2 p;
        do {
            p = {rng.next(-0.95, 0.95), rng.next(-0.95, 0.95)};
        } while (!(p.norm() <= 0.95));
        const Vec2 u = unit_vector(rng.next(0.0, 2.0 * std::numbers::pi));
        const auto [t_minus, t_plus] = line_circle_roots(circle, p, u);

        REQUIRE(t_minus < 0.0);
        REQUIRE(t_plus > 0.0);
        CHECK((p + t_minus * u).norm() == Catch::Approx(1.0).margin(1e-12));
        CHECK((p + t_plus * u).norm() == Catch::Approx(1.0).margin(1e-12));
        // product of roots = |d|^2 - r^2 (constant term of the monic quadratic)
        CHECK(t_minus * t_plus == Catch::Approx(p.norm_squared() - 1.0).margin(1e-12));
    }
}

TEST_CASE("roots are invariant under rotating the whole configuration") {
    const Circle circle = Circle::unit();
    const Vec2 p{0.4, -0.3};
    const double dir = 0.7;
    const auto base = line_circle_roots(circle, p, unit_vector(dir));
    for (double beta : {0.1, 1.3, 2.9, -0.8}) {
        const auto rotated = line_circle_roots(circle, p.rotated(beta), unit_vector(dir + beta));
        CHECK(rotated.t_minus == Catch::Approx(base.t_minus).margin(1e-13));
        CHECK(rotated.t_plus == Catch::Approx(base.t_plus).margin(1e-13));
    }
}

TEST_CASE("direction must be unit length") {
    const Circle circle = Circle::unit();
    CHECK_THROWS_AS(line_circle_roots(circle, {0.0, 0.0}, {1.0, 1.0}), NonUnitDirection);
    CHECK_THROWS_AS(line_circle_roots(circle, {0.0, 0.0}, {0.0, 0.0}), NonUnitDirection);
    const double nan = std::nan("");
    CHECK_THROWS_AS(line_circle_roots(circle, {0.0, 0.0}, {nan, 0.0}), NonUnitDirection);
    // within validation tolerance: accepted
    CHECK_NOTHROW(line_circle_roots(circle, {0.0, 0.0}, {1.0 + 5e-13, 0.0}));
}

TEST_CASE("point must be strictly interior") {
    const Circle circle = Circle::unit();
    CHECK_THROWS_AS(line_circle_roots(circle, {1.0, 0.0}, {0.0, 1.0}), PointNotInterior);
    CHECK_THROWS_AS(line_circle_roots(circle, {0.0, 1.0 - 1e-12}, {0.0, 1.0}), PointNotInterior);
    CHECK_THROWS_AS(line_circle_roots(circle, {2.0, 2.0}, {0.0, 1.0}), PointNotInterior);
    const double nan = std::nan("");
    CHECK_THROWS_AS(line_circle_roots(circle, {nan, 0.0}, {0.0, 1.0}), PointNotInterior);
    CHECK_NOTHROW(line_circle_roots(circle, {1.0 - 1e-8, 0.0}, {0.0, 1.0}));
}

TEST_CASE("circle construction validates its radius") {
    CHECK_THROWS_AS(Circle({0.0, 0.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Circle({0.0, 0.0}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(Circle({0.0, 0.0}, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(Circle({std::nan(""), 0.0}, 1.0), std::invalid_argument);
}

TEST_CASE("Vec2 rotation preserves length and advances the polar angle") {
    const Vec2 v{3.0, 4.0};
    const Vec2 w = v.rotated(1.1);
    CHECK(w.norm() == Catch::Approx(5.0).margin(1e-12));
    CHECK(w.angle() == Catch::Approx(v.angle() + 1.1).margin(1e-12));
    CHECK(unit_vector(0.25).angle() == Catch::Approx(0.25).margin(1e-15));
    CHECK(cross(v, w) > 0.0); // counterclockwise
}
