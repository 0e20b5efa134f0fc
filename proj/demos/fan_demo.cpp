// Minimal tour of the library: build a fan, check the sum-of-squares value,
// compare area oracles, and emit a figure.

#include <cstdio>
#include <fstream>
#include <numbers>

#include "cruxgeom/chord_fan.hpp"
#include "cruxgeom/svg.hpp"
#include "cruxgeom/sweep.hpp"

int main() {
    using namespace cruxgeom;

    // three chords through P = (0.35, 0.2), first chord horizontal
    const ChordFan fan(Circle::unit(), {0.35, 0.2}, 3, 0.0);
    std::printf("sum of squared endpoint distances: %.15f (2n = %d)\n",
                sum_squared_distances(fan), 2 * fan.n());

    // rotate the fan by 0.25 rad and measure the swept region three ways
    const SweptRegion region(fan, 0.25);
    std::printf("exact swept area:   %.15f\n", swept_area_exact(region));
    std::printf("quadrature oracle:  %.15f\n", area_quadrature(region, 1e-10).value);
    const AreaEstimate mc = area_monte_carlo(region, 200000, 42);
    std::printf("Monte Carlo oracle: %.15f +- %.5f\n", mc.value, mc.std_error);

    std::ofstream("fan_demo.svg") << render_svg(region);
    std::printf("wrote fan_demo.svg\n");
    return 0;
}
