#pragma once
/**
 * @file chord_fan.hpp
 * @brief Fans of n equally-angularly-spaced chords through an interior point,
 *        and the chord-sum identities they satisfy.
 *
 * A fan places n chords through a point P inside a circle, successive chords
 * separated by pi/n. Chord k (1-based) has direction angle
 * phase + (k-1)*pi/n. Writing PA_k, PB_k for the distances from P to the two
 * endpoints of chord k, the generalized Archimedes identity states
 *
 *     PA_1^2 + PB_1^2 + ... + PA_n^2 + PB_n^2 = 2n * radius^2   (n >= 2),
 *
 * independent of P and of the fan's phase. For n = 2 this is Archimedes'
 * perpendicular-chord theorem (Book of Lemmas, Prop. 11). The remaining
 * operations here evaluate, numerically, each identity in the vector proof
 * of that theorem for fans whose first chord is a diameter.
 *
 * n = 1 is admitted (a single rotating chord is a valid sweep configuration)
 * but is excluded from the pointwise 2n identity: with one chord the sum
 * PA^2 + PB^2 depends on the phase and only its average over a half-turn
 * equals 2 * radius^2. Operations whose contract is n >= 2 say so below.
 */

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cruxgeom/geom.hpp"

namespace cruxgeom {

/// Diameter detection tolerance, in radians, for the diameter-anchored
/// identities. Far above double-precision noise, far below any meaningful
/// configuration difference.
inline constexpr double kDiameterAngleTol = 1e-9;

/// First chord of the fan is required to be a diameter and is not.
struct NotDiameterAnchored : std::domain_error {
    using std::domain_error::domain_error;
};

/// One chord through P: endpoints, distances from P, and midpoint.
struct Chord {
    Vec2 a;          ///< endpoint on the t < 0 side of the direction vector
    Vec2 b;          ///< endpoint on the t >= 0 side
    double dist_a;   ///< |a - p|
    double dist_b;   ///< |b - p|
    Vec2 midpoint;   ///< (a + b) / 2
};

/// n chords through an interior point P with angular spacing pi/n.
///
/// The stored phase is normalized to [0, pi): chords are undirected, so
/// directions are taken mod pi. Immutable after construction.
class ChordFan {
public:
    ChordFan(Circle circle, Vec2 p, int n, double phase)
        : circle_(circle), p_(p), n_(n), phase_(normalize_phase(phase)) {
        if (n < 1) throw std::invalid_argument("ChordFan: n must be >= 1");
        if (!p.is_finite() || !std::isfinite(phase))
            throw std::invalid_argument("ChordFan: p and phase must be finite");
        if (!circle.strictly_inside(p))
            throw PointNotInterior("ChordFan: P is not strictly inside the circle");
    }

    const Circle& circle() const { return circle_; }
    Vec2 p() const { return p_; }
    int n() const { return n_; }
    double phase() const { return phase_; }

    /// Direction angle of chord i, 0-based: phase + i*pi/n.
    double direction_angle(int i) const {
        return phase_ + static_cast<double>(i) * std::numbers::pi / n_;
    }

    /// Angle reduced into [0, pi); pi itself maps to 0.
    static double normalize_phase(double phase) {
        double r = std::fmod(phase, std::numbers::pi);
        if (r < 0.0) r += std::numbers::pi;
        if (r >= std::numbers::pi) r = 0.0; // fmod rounding at the seam
        return r;
    }

private:
    Circle circle_;
    Vec2 p_;
    int n_;
    double phase_;
};

/// Builds the fan's n chords. Chord i (0-based) lies at direction angle
/// phase + i*pi/n, with endpoint a on the negative-parameter side.
inline std::vector<Chord> chords(const ChordFan& fan) {
    std::vector<Chord> out;
    out.reserve(static_cast<std::size_t>(fan.n()));
    for (int i = 0; i < fan.n(); ++i) {
        const Vec2 u = unit_vector(fan.direction_angle(i));
        const auto [t_minus, t_plus] = line_circle_roots(fan.circle(), fan.p(), u);
        const Vec2 a = fan.p() + t_minus * u;
        const Vec2 b = fan.p() + t_plus * u;
        out.push_back({a, b, (a - fan.p()).norm(), (b - fan.p()).norm(), 0.5 * (a + b)});
    }
    return out;
}

/// Sum of squared endpoint distances, computed from the chord endpoints:
/// sum_k (PA_k^2 + PB_k^2). For n >= 2 this equals 2n * radius^2 to within
/// 1e-10 on the unit circle, independent of P and phase. For n = 1 the value
/// is phase-dependent; see the file comment.
inline double sum_squared_distances(const ChordFan& fan) {
    double sum = 0.0;
    for (const Chord& c : chords(fan))
        sum += c.dist_a * c.dist_a + c.dist_b * c.dist_b;
    return sum;
}

/// Closed-form value of sum_squared_distances, used as its oracle.
///
/// Per chord, with d = P - center and s_k = <d, u_k>, the two roots satisfy
/// t+^2 + t-^2 = 4 s_k^2 - 2 (|d|^2 - R^2). Summing over the n directions,
/// sum_k s_k^2 = |d|^2 * sum_k cos^2(beta + k*pi/n) = |d|^2 * n/2, because
/// the doubled angles run through the n-th roots of unity and their cosines
/// cancel. The |d|^2 terms then drop out, leaving exactly 2n * R^2.
///
/// Returned for every n >= 1; the collapse step requires n >= 2, so for
/// n = 1 this is the half-turn average rather than the pointwise value.
inline double sum_squared_closed_form(const ChordFan& fan) {
    const double r = fan.circle().radius;
    return 2.0 * static_cast<double>(fan.n()) * r * r;
}

/// sum_{k=1..n} cos(2*pi*k/n). Zero for n >= 2 (the n-th roots of unity sum
/// to zero); equals 1 for n = 1, which is excluded from that contract.
inline double roots_of_unity_cos_sum(int n) {
    if (n < 1) throw std::invalid_argument("roots_of_unity_cos_sum: n must be >= 1");
    double sum = 0.0;
    for (int k = 1; k <= n; ++k)
        sum += std::cos(2.0 * std::numbers::pi * k / n);
    return sum;
}

/// Companion sum: sum_{k=1..n} 2*cos^2(k*pi/n), which equals
/// n + roots_of_unity_cos_sum(n) by the double-angle formula, hence n for
/// n >= 2 (to within 1e-12 * n).
inline double cos_squared_sum(int n) {
    if (n < 1) throw std::invalid_argument("cos_squared_sum: n must be >= 1");
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double c = std::cos(std::numbers::pi * k / n);
        sum += 2.0 * c * c;
    }
    return sum;
}

/// max_k |(A_k - P) + (B_k - P) - 2 (C_k - P)| over the fan's chords, where
/// C_k is the chord midpoint. Identically zero in exact arithmetic; stays
/// below 1e-12 * radius in doubles.
inline double midpoint_identity_residual(const ChordFan& fan) {
    double worst = 0.0;
    for (const Chord& c : chords(fan)) {
        const Vec2 lhs = (c.a - fan.p()) + (c.b - fan.p());
        const Vec2 rhs = 2.0 * (c.midpoint - fan.p());
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

namespace detail {

/// Absolute angular distance between two undirected directions (mod pi).
inline double undirected_angle_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), std::numbers::pi);
    return std::min(d, std::numbers::pi - d);
}

/// Throws unless chord 1 of the fan is a diameter within kDiameterAngleTol.
inline void require_diameter_anchor(const ChordFan& fan) {
    const Vec2 d = fan.p() - fan.circle().center;
    if (d.norm() <= 1e-12 * fan.circle().radius) return; // all chords are diameters
    if (undirected_angle_distance(fan.phase(), d.angle()) > kDiameterAngleTol)
        throw NotDiameterAnchored("chord 1 of the fan is not a diameter");
}

} // namespace detail

/// The fan through p whose first chord is a diameter: phase is the angle of
/// p - center taken mod pi (phase 0 when p coincides with the center).
inline ChordFan diameter_fan(const Circle& circle, Vec2 p, int n) {
    const Vec2 d = p - circle.center;
    const double phase = d.norm() <= 1e-12 * circle.radius ? 0.0 : d.angle();
    return ChordFan(circle, p, n, ChordFan::normalize_phase(phase));
}

/**
 * Midpoint pairing residual for a diameter-anchored fan.
 *
 * With chord 1 a diameter (so C_1 is the circle's center), the midpoint of
 * the chord at angle k*pi/n from the diameter pairs with the midpoint at
 * angle (n-k)*pi/n:
 *
 *     PC_[k] + PC_[n-k] = 2 cos^2(k*pi/n) PC_1,   k = 1..n,
 *
 * where [j] indexes chords mod n over undirected chords (the chord at angle
 * n*pi/n = pi is chord 1 again). Returns the worst |LHS - RHS| over k;
 * below 1e-12 * radius in doubles.
 *
 * @throws NotDiameterAnchored if chord 1 is not a diameter within 1e-9 rad.
 */
inline double diameter_pairing_residual(const ChordFan& fan) {
    detail::require_diameter_anchor(fan);
    const auto cs = chords(fan);
    const int n = fan.n();
    const Vec2 pc1 = cs[0].midpoint - fan.p();
    double worst = 0.0;
    for (int k = 1; k <= n; ++k) {
        const Vec2 lhs = (cs[static_cast<std::size_t>(k % n)].midpoint - fan.p()) +
                         (cs[static_cast<std::size_t>((n - k) % n)].midpoint - fan.p());
        const double c = std::cos(k * std::numbers::pi / n);
        const Vec2 rhs = 2.0 * c * c * pc1;
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

/**
 * Residual of the expansion identity for a diameter-anchored fan:
 *
 *   sum_k (PA_k^2 + PB_k^2)
 *     = 2 <PC_1, sum_k (PA_k + PB_k)> - 2n |PC_1|^2 + 2n R^2,
 *
 * which follows from expanding |PA_k - PC_1|^2 = R^2 (and likewise for B)
 * when C_1 is the center. Returns |LHS - RHS|; at most 1e-10 on the unit
 * circle.
 *
 * @throws NotDiameterAnchored if chord 1 is not a diameter within 1e-9 rad.
 */
inline double expansion_identity_residual(const ChordFan& fan) {
    detail::require_diameter_anchor(fan);
    const auto cs = chords(fan);
    const double n = static_cast<double>(fan.n());
    const double r = fan.circle().radius;

    const Vec2 pc1 = cs[0].midpoint - fan.p();
    double lhs = 0.0;
    Vec2 endpoint_sum{0.0, 0.0};
    for (const Chord& c : cs) {
        lhs += c.dist_a * c.dist_a + c.dist_b * c.dist_b;
        endpoint_sum = endpoint_sum + (c.a - fan.p()) + (c.b - fan.p());
    }
    const double rhs = 2.0 * dot(pc1, endpoint_sum) - 2.0 * n * pc1.norm_squared() + 2.0 * n * r * r;
    return std::abs(lhs - rhs);
}

} // namespace cruxgeom
