// cruxgeom: command-line front end for the chord-fan geometry library.
//
// Subcommands: verify (randomized identity suite, JSON report), area (one
// configuration, all oracles), sweep (polar grid of P, CSV), render (SVG
// figure). Angles are radians unless --degrees is given. The seed defaults
// to the CRUX_SEED environment variable, then to 0.
//
// Exit codes: 0 all checks passed, 1 checks ran with failures or I/O
// failure, 2 usage error.

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cruxgeom/chord_fan.hpp"
#include "cruxgeom/geom.hpp"
#include "cruxgeom/report_io.hpp"
#include "cruxgeom/svg.hpp"
#include "cruxgeom/sweep.hpp"
#include "cruxgeom/verify.hpp"

namespace {

using namespace cruxgeom;

constexpr double kDegToRad = std::numbers::pi / 180.0;

/// Writes `content` to `path`, or to stdout when path is empty.
/// Returns false (after printing to stderr) on filesystem failure.
bool write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cruxgeom: cannot open '" << path << "' for writing\n";
        return false;
    }
    out << content;
    out.flush();
    if (!out) {
        std::cerr << "cruxgeom: write to '" << path << "' failed\n";
        return false;
    }
    return true;
}

/// Seed resolution order: explicit --seed, then CRUX_SEED, then 0.
/// A malformed CRUX_SEED is a usage error.
std::optional<std::uint64_t> resolve_seed(bool seed_given, std::uint64_t seed_flag) {
    if (seed_given) return seed_flag;
    const char* env = std::getenv("CRUX_SEED");
    if (env == nullptr || *env == '\0') return std::uint64_t{0};
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0') {
        std::cerr << "cruxgeom: CRUX_SEED is not an unsigned integer: '" << env << "'\n";
        return std::nullopt;
    }
    return static_cast<std::uint64_t>(v);
}

std::string estimate_json(const AreaEstimate& e, double exact) {
    std::string out = "{\"method\": \"";
    out += to_string(e.method);
    out += "\", \"value\": " + format_float17(e.value);
    out += ", \"std_error\": " + format_float17(e.std_error);
    out += ", \"samples\": " + std::to_string(e.samples);
    out += ", \"residual\": " + format_float17(std::abs(e.value - exact));
    out += "}";
    return out;
}

std::string estimate_csv_row(const AreaEstimate& e, double exact) {
    std::string out = to_string(e.method);
    out += "," + format_float17(e.value);
    out += "," + format_float17(e.std_error);
    out += "," + std::to_string(e.samples);
    out += "," + format_float17(std::abs(e.value - exact));
    out += "\n";
    return out;
}

struct VerifyArgs {
    int trials = 100;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int n_min = 2;
    int n_max = 12;
    std::string output;
};

int cmd_verify(const VerifyArgs& a) {
    const auto seed = resolve_seed(a.seed_given, a.seed);
    if (!seed) return 2;
    VerificationReport report;
    try {
        report = run_suite(a.trials, *seed, a.n_min, a.n_max);
    } catch (const std::invalid_argument& e) {
        std::cerr << "cruxgeom: " << e.what() << "\n";
        return 2;
    }
    if (!write_output(a.output, report_to_json(report))) return 1;
    std::size_t failed = 0;
    for (const CheckResult& c : report.checks)
        if (!c.passed) ++failed;
    std::cerr << "verify: " << report.checks.size() - failed << "/" << report.checks.size()
              << " checks passed (seed " << *seed << ", " << report.trials << " trials)\n";
    return report.all_passed() ? 0 : 1;
}

struct AreaArgs {
    double px = 0.0;
    double py = 0.0;
    int n = 2;
    double phase = 0.0;
    double theta = 0.0;
    double radius = 1.0;
    long long samples = 1'000'000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double tol = 1e-9;
    int segments = 1024;
    bool multiplicity = false;
    bool degrees = false;
    std::string format = "json";
    std::string output;
};

int cmd_area(const AreaArgs& a) {
    const auto seed = resolve_seed(a.seed_given, a.seed);
    if (!seed) return 2;
    const double phase = a.degrees ? a.phase * kDegToRad : a.phase;
    const double theta = a.degrees ? a.theta * kDegToRad : a.theta;

    std::optional<ChordFan> fan;
    try {
        fan.emplace(Circle({0.0, 0.0}, a.radius), Vec2{a.px, a.py}, a.n, phase);
    } catch (const std::exception& e) {
        std::cerr << "cruxgeom: " << e.what() << "\n";
        return 2;
    }
    if (!(theta >= 0.0)) {
        std::cerr << "cruxgeom: theta must be >= 0\n";
        return 2;
    }
    const double band = std::numbers::pi / a.n;
    if (!a.multiplicity && theta > band + 1e-12) {
        std::cerr << "cruxgeom: theta exceeds pi/n; the swept sectors overlap. Pass "
                     "--multiplicity to measure the sweep with multiplicity.\n";
        return 2;
    }

    const double r2 = a.radius * a.radius;
    const double exact = swept_measure_multiplicity(*fan, theta);
    std::vector<AreaEstimate> estimates;
    estimates.push_back({exact, 0.0, 0, AreaMethod::exact});
    try {
        estimates.push_back(
            {sweep_rate_integral(*fan, theta, a.tol), 0.0, 0, AreaMethod::quadrature});
        if (!a.multiplicity) {
            const SweptRegion region(*fan, theta);
            estimates.push_back(area_monte_carlo(region, a.samples, *seed));
            estimates.push_back(area_polygon(region, a.segments));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "cruxgeom: " << e.what() << "\n";
        return 2;
    } catch (const ToleranceNotMet& e) {
        std::cerr << "cruxgeom: " << e.what() << "\n";
        return 1;
    }

    std::string out;
    if (a.format == "csv") {
        out = "method,value,std_error,samples,residual\n";
        for (const AreaEstimate& e : estimates) out += estimate_csv_row(e, exact);
    } else {
        out = "{\n";
        out += "  \"px\": " + format_float17(a.px) + ",\n";
        out += "  \"py\": " + format_float17(a.py) + ",\n";
        out += "  \"n\": " + std::to_string(a.n) + ",\n";
        out += "  \"phase\": " + format_float17(fan->phase()) + ",\n";
        out += "  \"theta\": " + format_float17(theta) + ",\n";
        out += "  \"radius\": " + format_float17(a.radius) + ",\n";
        out += std::string("  \"multiplicity\": ") + (a.multiplicity ? "true" : "false") + ",\n";
        out += "  \"exact\": " + format_float17(exact) + ",\n";
        out += "  \"estimates\": [";
        for (std::size_t i = 0; i < estimates.size(); ++i) {
            out += i == 0 ? "\n    " : ",\n    ";
            out += estimate_json(estimates[i], exact);
        }
        out += "\n  ]\n}\n";
    }
    if (!write_output(a.output, out)) return 1;

    bool pass = true;
    for (const AreaEstimate& e : estimates) {
        const double residual = std::abs(e.value - exact);
        switch (e.method) {
            case AreaMethod::exact: break;
            case AreaMethod::quadrature:
                pass = pass && residual <= 1e-8 * r2;
                break;
            case AreaMethod::monte_carlo:
                pass = pass && residual <= 4.0 * e.std_error + 1e-12;
                break;
            case AreaMethod::polygon: {
                const double scale = 1024.0 / a.segments;
                pass = pass && residual <= 1e-4 * r2 * scale * scale;
                break;
            }
        }
    }
    return pass ? 0 : 1;
}

struct SweepArgs {
    int n = 2;
    double phase = 0.0;
    double theta = 0.3;
    double radius = 1.0;
    double tol = 1e-9;
    int grid_radii = 8;
    int grid_angles = 16;
    double grid_rmax = 0.9;
    bool degrees = false;
    std::string output;
};

int cmd_sweep(const SweepArgs& a) {
    const double phase = a.degrees ? a.phase * kDegToRad : a.phase;
    const double theta = a.degrees ? a.theta * kDegToRad : a.theta;
    if (a.n < 1 || a.grid_radii < 1 || a.grid_angles < 1) {
        std::cerr << "cruxgeom: n, --grid-radii and --grid-angles must be >= 1\n";
        return 2;
    }
    if (!(a.grid_rmax >= 0.0 && a.grid_rmax < a.radius)) {
        std::cerr << "cruxgeom: --grid-rmax must lie in [0, radius)\n";
        return 2;
    }
    if (!(theta >= 0.0 && theta <= std::numbers::pi / a.n + 1e-12)) {
        std::cerr << "cruxgeom: theta must lie in [0, pi/n] for the sweep grid\n";
        return 2;
    }

    const Circle circle({0.0, 0.0}, a.radius);
    const double expected =
        static_cast<double>(a.n) * theta * a.radius * a.radius;
    std::string out = "p_x,p_y,n,theta,area_quadrature,abs_residual_vs_ntheta\n";
    double max_residual = 0.0;
    try {
        for (int i = 1; i <= a.grid_radii; ++i) {
            const double r = a.grid_rmax * i / a.grid_radii;
            for (int j = 0; j < a.grid_angles; ++j) {
                const double ang = 2.0 * std::numbers::pi * j / a.grid_angles;
                const Vec2 p{r * std::cos(ang), r * std::sin(ang)};
                const ChordFan fan(circle, p, a.n, phase);
                const double area = sweep_rate_integral(fan, theta, a.tol);
                const double residual = std::abs(area - expected);
                max_residual = std::max(max_residual, residual);
                out += format_float17(p.x) + "," + format_float17(p.y) + "," +
                       std::to_string(a.n) + "," + format_float17(theta) + "," +
                       format_float17(area) + "," + format_float17(residual) + "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "cruxgeom: " << e.what() << "\n";
        return 1;
    }
    if (!write_output(a.output, out)) return 1;
    std::cerr << "sweep: " << a.grid_radii * a.grid_angles << " grid points, max residual "
              << format_float17(max_residual) << "\n";
    return max_residual <= 1e-8 * a.radius * a.radius ? 0 : 1;
}

struct RenderArgs {
    double px = 0.0;
    double py = 0.0;
    int n = 2;
    double phase = 0.0;
    double theta = 0.0;
    double radius = 1.0;
    bool labels = false;
    bool degrees = false;
    std::string output;
};

int cmd_render(const RenderArgs& a) {
    const double phase = a.degrees ? a.phase * kDegToRad : a.phase;
    const double theta = a.degrees ? a.theta * kDegToRad : a.theta;
    std::string svg;
    try {
        const ChordFan fan(Circle({0.0, 0.0}, a.radius), Vec2{a.px, a.py}, a.n, phase);
        SvgOptions options;
        options.labels = a.labels;
        svg = render_svg(SweptRegion(fan, theta), options);
    } catch (const std::exception& e) {
        std::cerr << "cruxgeom: " << e.what() << "\n";
        return 2;
    }
    return write_output(a.output, svg) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chord-fan geometry: identity verification, swept areas, figures"};
    app.require_subcommand(1);

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "run the randomized identity suite");
    verify->add_option("--trials", va.trials, "number of random configurations");
    CLI::Option* vseed = verify->add_option("--seed", va.seed, "RNG seed (default CRUX_SEED, then 0)");
    verify->add_option("--n-min", va.n_min, "smallest chord count drawn");
    verify->add_option("--n-max", va.n_max, "largest chord count drawn");
    verify->add_option("-o,--output", va.output, "write the JSON report here instead of stdout");

    AreaArgs aa;
    CLI::App* area = app.add_subcommand("area", "swept area of one configuration, all oracles");
    area->add_option("--px", aa.px, "x of the interior point P");
    area->add_option("--py", aa.py, "y of the interior point P");
    area->add_option("--n", aa.n, "number of chords");
    area->add_option("--phase", aa.phase, "direction of the first chord");
    area->add_option("--theta", aa.theta, "rotation angle");
    area->add_option("--radius", aa.radius, "circle radius");
    area->add_option("--samples", aa.samples, "Monte Carlo sample count");
    CLI::Option* aseed = area->add_option("--seed", aa.seed, "RNG seed (default CRUX_SEED, then 0)");
    area->add_option("--tol", aa.tol, "quadrature tolerance");
    area->add_option("--segments", aa.segments, "polygon segments per arc");
    area->add_flag("--multiplicity", aa.multiplicity,
                   "allow theta > pi/n and report the sweep measure with multiplicity");
    area->add_flag("--degrees", aa.degrees, "interpret --phase and --theta as degrees");
    area->add_option("--format", aa.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    area->add_option("-o,--output", aa.output, "write the report here instead of stdout");

    SweepArgs sa;
    CLI::App* sweep = app.add_subcommand("sweep", "area over a polar grid of P, CSV");
    sweep->add_option("--n", sa.n, "number of chords");
    sweep->add_option("--phase", sa.phase, "direction of the first chord");
    sweep->add_option("--theta", sa.theta, "rotation angle");
    sweep->add_option("--radius", sa.radius, "circle radius");
    sweep->add_option("--tol", sa.tol, "quadrature tolerance");
    sweep->add_option("--grid-radii", sa.grid_radii, "number of grid radii");
    sweep->add_option("--grid-angles", sa.grid_angles, "number of grid angles");
    sweep->add_option("--grid-rmax", sa.grid_rmax, "largest grid radius");
    sweep->add_flag("--degrees", sa.degrees, "interpret --phase and --theta as degrees");
    sweep->add_option("-o,--output", sa.output, "write the CSV here instead of stdout");

    RenderArgs ra;
    CLI::App* render = app.add_subcommand("render", "SVG figure of the swept region");
    render->add_option("--px", ra.px, "x of the interior point P");
    render->add_option("--py", ra.py, "y of the interior point P");
    render->add_option("--n", ra.n, "number of chords");
    render->add_option("--phase", ra.phase, "direction of the first chord");
    render->add_option("--theta", ra.theta, "rotation angle");
    render->add_option("--radius", ra.radius, "circle radius");
    render->add_flag("--labels", ra.labels, "draw C and P text labels");
    render->add_flag("--degrees", ra.degrees, "interpret --phase and --theta as degrees");
    render->add_option("-o,--output", ra.output, "write the SVG here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    va.seed_given = vseed->count() > 0;
    aa.seed_given = aseed->count() > 0;
    if (verify->parsed()) return cmd_verify(va);
    if (area->parsed()) return cmd_area(aa);
    if (sweep->parsed()) return cmd_sweep(sa);
    return cmd_render(ra);
}
