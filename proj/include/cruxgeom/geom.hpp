#pragma once
/**
 * @file geom.hpp
 * @brief Foundational 2D types: Vec2, Circle, and the line-circle
 *        intersection primitive everything else is built on.
 *
 * All types are immutable values and every operation is pure, so the whole
 * layer is thread-safe without synchronization. Arithmetic is plain double
 * precision; tolerances throughout the library are chosen for that.
 */

#include <cmath>
#include <stdexcept>
#include <string>

namespace cruxgeom {

/// Requested point must lie strictly inside the circle.
struct PointNotInterior : std::domain_error {
    using std::domain_error::domain_error;
};

/// Direction vectors must be unit length; callers normalize, we validate.
struct NonUnitDirection : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Interior margin: a point is accepted as "strictly inside" a circle of
/// radius R only if its center distance is <= R*(1 - kInteriorMargin).
/// Keeps the intersection discriminant safely positive in double precision.
inline constexpr double kInteriorMargin = 1e-9;

/// Tolerance on | |dir| - 1 | for direction-vector validation.
inline constexpr double kUnitDirectionTol = 1e-12;

/// 2D vector / point with double components.
struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double px, double py) : x(px), y(py) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return {v.x * s, v.y * s}; }

    constexpr double norm_squared() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }

    /// Polar angle in (-pi, pi]; angle of the zero vector is 0.
    double angle() const { return std::atan2(y, x); }

    /// Rotation about the origin by `radians`, counterclockwise.
    Vec2 rotated(double radians) const {
        const double c = std::cos(radians), s = std::sin(radians);
        return {c * x - s * y, s * x + c * y};
    }

    bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }
};

/// Inner product.
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3D cross product; zero iff a, b are parallel.
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Unit vector at polar angle `radians`.
inline Vec2 unit_vector(double radians) { return {std::cos(radians), std::sin(radians)}; }

/// Circle given by center and radius > 0.
struct Circle {
    Vec2 center;
    double radius;

    Circle(Vec2 c, double r) : center(c), radius(r) {
        if (!c.is_finite() || !std::isfinite(r) || r <= 0.0)
            throw std::invalid_argument("Circle: center must be finite and radius > 0");
    }

    /// Unit circle about the origin.
    static Circle unit() { return Circle({0.0, 0.0}, 1.0); }

    /// True iff p is inside by at least the interior margin.
    bool strictly_inside(Vec2 p) const {
        const double d = (p - center).norm();
        return d <= radius * (1.0 - kInteriorMargin);
    }
};

/// The two line parameters where a line through an interior point meets the
/// circle, with t_minus < 0 < t_plus.
struct LineCircleRoots {
    double t_minus;
    double t_plus;
};

/**
 * Intersect the line { p + t*dir } with a circle, for p strictly inside.
 *
 * Solves |p + t*dir - center|^2 = radius^2, i.e.
 *   t = -<p-center, dir> +- sqrt(<p-center,dir>^2 + radius^2 - |p-center|^2).
 * Both intersection points lie on the circle to within 1e-12 * radius.
 *
 * @throws NonUnitDirection if | |dir| - 1 | > 1e-12.
 * @throws PointNotInterior if p violates the interior margin.
 */
inline LineCircleRoots line_circle_roots(const Circle& circle, Vec2 p, Vec2 dir) {
    // Written with negated comparisons so NaN inputs fail into the errors.
    if (!(std::abs(dir.norm() - 1.0) <= kUnitDirectionTol))
        throw NonUnitDirection("line_circle_roots: direction is not unit length");
    const Vec2 d = p - circle.center;
    if (!(d.norm() <= circle.radius * (1.0 - kInteriorMargin)))
        throw PointNotInterior("line_circle_roots: point is not strictly inside the circle");

    const double s = dot(d, dir);
    const double disc = s * s + circle.radius * circle.radius - d.norm_squared();
    const double root = std::sqrt(disc);
    return {-s - root, -s + root};
}

} // namespace cruxgeom
