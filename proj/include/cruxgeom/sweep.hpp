#pragma once
/**
 * @file sweep.hpp
 * @brief Swept-region semantics: rotate every chord of a fan counterclockwise
 *        about P by theta and measure the region the chords sweep.
 *
 * Rotating the fan through an infinitesimal angle dphi sweeps 2n thin
 * sectors of total area (1/2) sum_k (PA_k^2 + PB_k^2) dphi, so the exact
 * swept area for theta in [0, pi/n] is n * theta * radius^2 -- independent
 * of where P sits. At theta = pi/n the 2n sectors tile the whole disk; past
 * that the sectors overlap previously swept ground, and the n*theta figure
 * keeps counting with multiplicity while the point-set area saturates at
 * pi * radius^2. The API keeps the two readings separate:
 * swept_area_exact (strict set area, theta <= pi/n) and
 * swept_measure_multiplicity (any theta >= 0).
 *
 * Three independent estimators cross-check the exact value: adaptive-Simpson
 * quadrature of the sweep rate, seeded rejection-sampling Monte Carlo over
 * the membership predicate, and a shoelace sum over polygonal sector
 * approximations.
 */

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "cruxgeom/chord_fan.hpp"
#include "cruxgeom/geom.hpp"
#include "cruxgeom/numerics.hpp"

namespace cruxgeom {

/// Rotation angle outside the valid domain of the operation.
struct ThetaOutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

enum class AreaMethod { exact, quadrature, monte_carlo, polygon };

inline const char* to_string(AreaMethod m) {
    switch (m) {
        case AreaMethod::exact: return "exact";
        case AreaMethod::quadrature: return "quadrature";
        case AreaMethod::monte_carlo: return "monte_carlo";
        case AreaMethod::polygon: return "polygon";
    }
    return "unknown";
}

/// One area measurement. std_error is 0 for deterministic methods and
/// samples is 0 for everything except monte_carlo.
struct AreaEstimate {
    double value;
    double std_error;
    long long samples;
    AreaMethod method;
};

/// A chord fan plus a rotation angle theta in [0, pi/n]: the strict
/// point-set swept region. Larger rotations only make sense as a
/// multiplicity measure; use swept_measure_multiplicity for those.
class SweptRegion {
public:
    SweptRegion(ChordFan fan, double theta) : fan_(std::move(fan)), theta_(theta) {
        const double limit = std::numbers::pi / fan_.n();
        if (!(theta >= 0.0 && theta <= limit + 1e-12))
            throw ThetaOutOfRange("SweptRegion: theta must lie in [0, pi/n]");
    }

    const ChordFan& fan() const { return fan_; }
    double theta() const { return theta_; }

private:
    ChordFan fan_;
    double theta_;
};

/// Exact swept area n * theta * radius^2; the pivot P drops out.
inline double swept_area_exact(const SweptRegion& region) {
    const double r = region.fan().circle().radius;
    return static_cast<double>(region.fan().n()) * region.theta() * r * r;
}

/// The sweep measure n * theta * radius^2 for arbitrary theta >= 0: the
/// integral of dA/dtheta without clipping overlaps, so past pi/n it counts
/// re-swept ground with multiplicity (theta = pi covers the disk n times).
inline double swept_measure_multiplicity(const ChordFan& fan, double theta) {
    if (!(theta >= 0.0))
        throw ThetaOutOfRange("swept_measure_multiplicity: theta must be >= 0");
    const double r = fan.circle().radius;
    return static_cast<double>(fan.n()) * theta * r * r;
}

/// Instantaneous rate of change of swept area, dA/dtheta, for the fan
/// rotated by `offset` radians about P: half the sum of the squared ray
/// lengths from P. Constant (= n * radius^2) for n >= 2; for n = 1 it is
/// genuinely offset-dependent.
inline double rotated_sweep_rate(const ChordFan& fan, double offset) {
    double sum = 0.0;
    for (int i = 0; i < fan.n(); ++i) {
        const Vec2 u = unit_vector(fan.direction_angle(i) + offset);
        const auto [t_minus, t_plus] = line_circle_roots(fan.circle(), fan.p(), u);
        sum += t_minus * t_minus + t_plus * t_plus;
    }
    return 0.5 * sum;
}

/// dA/dtheta of the fan in its reference position: half of
/// sum_squared_distances. Equals n * radius^2 to within 1e-10 for n >= 2,
/// which is exactly why the swept area cannot depend on P.
inline double sweep_rate(const ChordFan& fan) {
    return 0.5 * sum_squared_distances(fan);
}

/**
 * Swept-region membership. A point x (not P) lies in the region iff it is
 * strictly inside the circle and the ray P->x, measured from the fan's
 * phase, falls inside the rotating band:
 *
 *     (angle(x - P) - phase) mod (pi/n)  in  [0, theta].
 *
 * The band is closed on both edges. P itself belongs to the region iff
 * theta > 0 (it is the apex of every sector).
 */
inline bool contains(const SweptRegion& region, Vec2 x) {
    const ChordFan& fan = region.fan();
    if (!((x - fan.circle().center).norm() < fan.circle().radius)) return false;
    const Vec2 rel = x - fan.p();
    if (rel.x == 0.0 && rel.y == 0.0) return region.theta() > 0.0;
    const double band = std::numbers::pi / fan.n();
    double r = std::fmod(rel.angle() - fan.phase(), band);
    if (r < 0.0) r += band;
    return r <= region.theta();
}

/**
 * Integral of the instantaneous sweep rate over [0, theta] by adaptive
 * Simpson, with ray lengths recomputed from line_circle_roots at every
 * configuration angle. Valid for any theta >= 0; past pi/n this is the
 * multiplicity measure, not the set area. For n = 1 the rate is genuinely
 * phase-dependent and the integral matches n*theta*radius^2 only over full
 * half-periods.
 *
 * @throws ToleranceNotMet if subdivision exceeds 2^20 intervals.
 */
inline double sweep_rate_integral(const ChordFan& fan, double theta, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("sweep_rate_integral: tol must be > 0");
    if (!(theta >= 0.0)) throw ThetaOutOfRange("sweep_rate_integral: theta must be >= 0");
    if (theta == 0.0) return 0.0;
    return adaptive_simpson([&fan](double phi) { return rotated_sweep_rate(fan, phi); }, 0.0,
                            theta, tol);
}

/**
 * Quadrature oracle: integrates the sweep rate over [0, theta] to absolute
 * tolerance tol. Deterministic.
 *
 * @throws ToleranceNotMet if subdivision exceeds 2^20 intervals.
 */
inline AreaEstimate area_quadrature(const SweptRegion& region, double tol) {
    return {sweep_rate_integral(region.fan(), region.theta(), tol), 0.0, 0,
            AreaMethod::quadrature};
}

/**
 * Monte Carlo oracle: draws `samples` points uniformly in the disk by
 * rejection from the bounding square, counts membership hits, and scales by
 * the disk area:
 *
 *     value = pi * radius^2 * hits / samples,
 *     std_error = pi * radius^2 * sqrt(p(1-p) / samples),  p = hits/samples.
 *
 * Samples are drawn sequentially from one seeded stream, so the result is
 * bit-reproducible for a fixed (seed, samples) pair.
 */
inline AreaEstimate area_monte_carlo(const SweptRegion& region, long long samples,
                                     std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("area_monte_carlo: samples must be >= 1");
    const Circle& circle = region.fan().circle();
    UniformRng rng(seed);
    long long hits = 0;
    for (long long i = 0; i < samples; ++i) {
        Vec2 x;
        do {
            x = {circle.center.x + circle.radius * (2.0 * rng.next_unit() - 1.0),
                 circle.center.y + circle.radius * (2.0 * rng.next_unit() - 1.0)};
        } while (!((x - circle.center).norm_squared() < circle.radius * circle.radius));
        if (contains(region, x)) ++hits;
    }
    const double disk_area = std::numbers::pi * circle.radius * circle.radius;
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    const double value = disk_area * p;
    const double std_error = disk_area * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
    return {value, std_error, samples, AreaMethod::monte_carlo};
}

/**
 * Polygon oracle: each of the 2n swept sectors (apex P, endpoints gliding
 * along the circle) is approximated by the fan polygon through
 * segments_per_arc + 1 points of its arc, and the signed shoelace areas are
 * summed. Converges to the exact area like segments_per_arc^-2.
 */
inline AreaEstimate area_polygon(const SweptRegion& region, int segments_per_arc) {
    if (segments_per_arc < 1)
        throw std::invalid_argument("area_polygon: segments_per_arc must be >= 1");
    const ChordFan& fan = region.fan();
    const double theta = region.theta();
    if (theta == 0.0) return {0.0, 0.0, 0, AreaMethod::polygon};

    const int rays = 2 * fan.n();
    const double spacing = std::numbers::pi / fan.n();
    double total = 0.0;
    std::vector<Vec2> poly;
    poly.reserve(static_cast<std::size_t>(segments_per_arc) + 2);
    for (int j = 0; j < rays; ++j) {
        poly.clear();
        poly.push_back(fan.p());
        for (int i = 0; i <= segments_per_arc; ++i) {
            const double psi = fan.phase() + j * spacing + theta * i / segments_per_arc;
            const Vec2 u = unit_vector(psi);
            const auto roots = line_circle_roots(fan.circle(), fan.p(), u);
            poly.push_back(fan.p() + roots.t_plus * u);
        }
        double shoelace = 0.0;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Vec2 v = poly[i];
            const Vec2 w = poly[(i + 1) % poly.size()];
            shoelace += cross(v, w);
        }
        total += 0.5 * shoelace;
    }
    return {total, 0.0, 0, AreaMethod::polygon};
}

/**
 * Additivity of the sweep: rotating by theta1 + theta2 covers the same
 * ground as rotating by theta1 and then sweeping the rotated fan by theta2.
 * Returns |A(phase, theta1+theta2) - A(phase, theta1) - A(phase+theta1,
 * theta2)| with every term computed by area_quadrature at tolerance 1e-9;
 * stays below 5e-9. Requires theta1, theta2 >= 0 and theta1+theta2 <= pi/n.
 */
inline double sweep_additivity_residual(const ChordFan& fan, double theta1, double theta2) {
    if (!(theta1 >= 0.0 && theta2 >= 0.0))
        throw ThetaOutOfRange("sweep_additivity_residual: angles must be >= 0");
    constexpr double tol = 1e-9;
    const double whole = area_quadrature(SweptRegion(fan, theta1 + theta2), tol).value;
    const double first = area_quadrature(SweptRegion(fan, theta1), tol).value;
    const ChordFan shifted(fan.circle(), fan.p(), fan.n(), fan.phase() + theta1);
    const double second = area_quadrature(SweptRegion(shifted, theta2), tol).value;
    return std::abs(whole - first - second);
}

} // namespace cruxgeom
