#pragma once
/**
 * @file numerics.hpp
 * @brief Adaptive Simpson quadrature and the seeded uniform generator shared
 *        by the stochastic and randomized-verification code.
 */

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

namespace cruxgeom {

/// Adaptive quadrature hit its subdivision cap before the tolerance.
struct ToleranceNotMet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default interval cap for adaptive_simpson.
inline constexpr std::size_t kDefaultSimpsonIntervalCap = std::size_t{1} << 20;

namespace detail {

template <class F>
double simpson_recurse(F& f, double a, double fa, double m, double fm, double b, double fb,
                       double whole, double tol, std::size_t& intervals, std::size_t cap) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0; // Richardson correction
    if (intervals + 1 > cap)
        throw ToleranceNotMet("adaptive_simpson: interval cap reached before tolerance");
    ++intervals;
    return simpson_recurse(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, intervals, cap) +
           simpson_recurse(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, intervals, cap);
}

} // namespace detail

/**
 * Integrates f over [a, b] to absolute tolerance tol with adaptive Simpson
 * subdivision (Richardson-corrected). Deterministic: evaluation points
 * depend only on (a, b, tol) and the values of f.
 *
 * @throws ToleranceNotMet once the subdivision would exceed `cap` intervals.
 */
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol,
                        std::size_t cap = kDefaultSimpsonIntervalCap) {
    if (!(tol > 0.0)) throw std::invalid_argument("adaptive_simpson: tol must be > 0");
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    std::size_t intervals = 1;
    return detail::simpson_recurse(f, a, fa, m, fm, b, fb, whole, tol, intervals, cap);
}

/**
 * Seeded uniform-double stream over the standard mt19937_64 engine.
 *
 * The engine's output sequence is fixed by the C++ standard, and the mapping
 * to doubles below uses the top 53 bits directly, so a (seed, call-sequence)
 * pair produces identical values on every conforming platform. That makes
 * the seed a full reproducibility contract for everything built on top.
 */
class UniformRng {
public:
    explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double next(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Uniform integer in [lo, hi] (inclusive).
    int next_int(int lo, int hi) {
        const double u = next_unit();
        int v = lo + static_cast<int>(u * (static_cast<double>(hi) - lo + 1.0));
        return v > hi ? hi : v;
    }

    /// Name of the underlying generator, recorded in reports.
    static constexpr const char* generator_name() { return "mt19937_64"; }

private:
    std::mt19937_64 engine_;
};

} // namespace cruxgeom
