#pragma once
/**
 * @file verify.hpp
 * @brief Randomized verification suite: draws fan configurations on the unit
 *        circle and runs every identity check at a pinned tolerance.
 *
 * Each trial draws one configuration (interior point, chord count, phase,
 * rotation angle) from a seeded stream and records eight checks. Residuals
 * and tolerances are kept per check so reports stay auditable: a failing
 * check names the exact configuration that produced it.
 */

#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cruxgeom/chord_fan.hpp"
#include "cruxgeom/geom.hpp"
#include "cruxgeom/numerics.hpp"
#include "cruxgeom/sweep.hpp"

namespace cruxgeom {

/// The drawn configuration a check ran against.
struct TrialConfig {
    double px;
    double py;
    int n;
    double phase;
    double theta;
};

struct CheckResult {
    std::string name;
    bool passed;
    double residual;
    double tolerance;
    TrialConfig config;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    std::uint64_t seed;
    int trials;
    std::string generator_name;
    long long wall_time_ms;

    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline void push_check(std::vector<CheckResult>& out, std::string name, double residual,
                       double tolerance, const TrialConfig& config) {
    out.push_back({std::move(name), residual <= tolerance, residual, tolerance, config});
}

} // namespace detail

/**
 * Runs `trials` independent configurations on the unit circle. Per trial the
 * draws happen in a fixed order (interior point by rejection from the
 * [-0.95, 0.95]^2 square into the disk of radius 0.95, then n, phase, theta,
 * then the additivity split), so a fixed (seed, trials, n_min, n_max)
 * quadruple reproduces the report bit for bit.
 *
 * Checks per trial and their absolute tolerances:
 *   archimedes_sum      sum of squared chord-endpoint distances vs 2n        1e-10
 *   sweep_rate          dA/dtheta vs n                                       1e-10
 *   quadrature_vs_exact adaptive-Simpson swept area vs n*theta               1e-8
 *   midpoint_identity   endpoint-vector sum vs doubled midpoint vectors      1e-12
 *   diameter_pairing    paired midpoint vectors vs 2cos^2 scaling            1e-12
 *   expansion_identity  squared-distance expansion about the near endpoints  1e-10
 *   cos_sum             roots-of-unity cosine sums                           1e-12 * n
 *   sweep_additivity    A(theta1+theta2) vs A(theta1) + A(theta2)            5e-9
 *
 * The diameter_pairing check runs on the diameter-anchored fan through the
 * same point (its own phase is recorded in the check's config). n = 1 is a
 * legitimate draw when n_min = 1 but several identities genuinely do not
 * hold pointwise there; the default range starts at 2.
 *
 * @throws std::invalid_argument unless trials >= 1 and 1 <= n_min <= n_max <= 64.
 */
inline VerificationReport run_suite(int trials, std::uint64_t seed, int n_min = 2,
                                    int n_max = 12) {
    if (trials < 1) throw std::invalid_argument("run_suite: trials must be >= 1");
    if (!(1 <= n_min && n_min <= n_max && n_max <= 64))
        throw std::invalid_argument("run_suite: need 1 <= n_min <= n_max <= 64");

    const auto t0 = std::chrono::steady_clock::now();
    const Circle circle = Circle::unit();
    UniformRng rng(seed);
    VerificationReport report;
    report.seed = seed;
    report.trials = trials;
    report.generator_name = UniformRng::generator_name();
    report.checks.reserve(static_cast<std::size_t>(trials) * 8);

    for (int t = 0; t < trials; ++t) {
        Vec2 p;
        do {
            p = {rng.next(-0.95, 0.95), rng.next(-0.95, 0.95)};
        } while (!(p.norm() <= 0.95));
        const int n = rng.next_int(n_min, n_max);
        const double phase = rng.next(0.0, std::numbers::pi);
        const double theta = rng.next(0.0, std::numbers::pi / n);
        const double split = rng.next_unit();

        const ChordFan fan(circle, p, n, phase);
        const TrialConfig cfg{p.x, p.y, n, fan.phase(), theta};
        const double n_r2 = static_cast<double>(n);

        detail::push_check(report.checks, "archimedes_sum",
                           std::abs(sum_squared_distances(fan) - sum_squared_closed_form(fan)),
                           1e-10, cfg);
        detail::push_check(report.checks, "sweep_rate", std::abs(sweep_rate(fan) - n_r2), 1e-10,
                           cfg);

        const SweptRegion region(fan, theta);
        detail::push_check(
            report.checks, "quadrature_vs_exact",
            std::abs(area_quadrature(region, 1e-10).value - swept_area_exact(region)), 1e-8, cfg);

        detail::push_check(report.checks, "midpoint_identity", midpoint_identity_residual(fan),
                           1e-12, cfg);

        const ChordFan dfan = diameter_fan(circle, p, n);
        const TrialConfig dcfg{p.x, p.y, n, dfan.phase(), theta};
        detail::push_check(report.checks, "diameter_pairing", diameter_pairing_residual(dfan),
                           1e-12, dcfg);
        detail::push_check(report.checks, "expansion_identity", expansion_identity_residual(dfan),
                           1e-10, dcfg);

        const double cos_residual =
            std::max(std::abs(roots_of_unity_cos_sum(n)), std::abs(cos_squared_sum(n) - n_r2));
        detail::push_check(report.checks, "cos_sum", cos_residual, 1e-12 * n, cfg);

        detail::push_check(report.checks, "sweep_additivity",
                           sweep_additivity_residual(fan, split * theta, (1.0 - split) * theta),
                           5e-9, cfg);
    }

    const auto t1 = std::chrono::steady_clock::now();
    report.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return report;
}

} // namespace cruxgeom
