#pragma once
/**
 * @file svg.hpp
 * @brief SVG rendering of a swept region: circle, start and end chords, and
 *        the 2n swept sectors.
 *
 * Output is a self-contained SVG string with all coordinates printed at a
 * fixed %.6f, so a given region renders to identical bytes on every run.
 * Geometry lives inside a scale(1,-1) group so the mathematical y-axis
 * points up; text labels sit outside that group (with negated y) to avoid
 * mirrored glyphs.
 */

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "cruxgeom/chord_fan.hpp"
#include "cruxgeom/geom.hpp"
#include "cruxgeom/sweep.hpp"

namespace cruxgeom {

struct SvgOptions {
    bool labels = false; ///< draw "C" and "P" text next to the markers
    int width_px = 640;  ///< raster hint; the viewBox keeps the figure scalable
};

namespace detail {

inline std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

inline void append_attr(std::string& out, const char* name, double v) {
    out += ' ';
    out += name;
    out += "=\"";
    out += fmt6(v);
    out += '"';
}

} // namespace detail

/**
 * Renders the region to an SVG document. Start chords are solid, end chords
 * (the fan rotated by theta) dashed, and each of the 2n swept sectors is a
 * translucent path of class "sector": apex P, the arc from the ray's hit
 * point at rotation 0 to its hit point at rotation theta, back to P. The
 * arc's large-arc flag follows the counterclockwise central angle between
 * the two hit points, which exceeds pi for off-center P at large theta.
 * Degenerate theta = 0 regions render with chords only, no sector paths.
 */
inline std::string render_svg(const SweptRegion& region, const SvgOptions& options = {}) {
    using detail::append_attr;
    using detail::fmt6;

    const ChordFan& fan = region.fan();
    const Circle& circle = fan.circle();
    const double r = circle.radius;
    const double theta = region.theta();
    const int rays = 2 * fan.n();
    const double spacing = std::numbers::pi / fan.n();

    const auto hit = [&](double psi) {
        const Vec2 u = unit_vector(psi);
        return fan.p() + line_circle_roots(circle, fan.p(), u).t_plus * u;
    };

    std::string out;
    out.reserve(4096);
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    out += fmt6(circle.center.x - 1.1 * r) + " " + fmt6(-circle.center.y - 1.1 * r) + " " +
           fmt6(2.2 * r) + " " + fmt6(2.2 * r) + "\"";
    out += " width=\"" + std::to_string(options.width_px) + "\" height=\"" +
           std::to_string(options.width_px) + "\">\n";
    out += "<style>\n";
    out += ".outline { fill: none; stroke: #333333; stroke-width: " + fmt6(0.010 * r) + "; }\n";
    out += ".sector { fill: #4a90d9; fill-opacity: 0.18; stroke: none; }\n";
    out += ".chord-start { stroke: #1f5fa8; stroke-width: " + fmt6(0.012 * r) + "; }\n";
    out += ".chord-end { stroke: #c0392b; stroke-width: " + fmt6(0.012 * r) +
           "; stroke-dasharray: " + fmt6(0.040 * r) + " " + fmt6(0.030 * r) + "; }\n";
    out += ".marker { fill: #222222; }\n";
    out += ".label { font-size: " + fmt6(0.120 * r) + "px; font-family: sans-serif; fill: #222222; }\n";
    out += "</style>\n";
    out += "<g transform=\"scale(1,-1)\">\n";

    out += "<circle class=\"outline\"";
    append_attr(out, "cx", circle.center.x);
    append_attr(out, "cy", circle.center.y);
    append_attr(out, "r", r);
    out += "/>\n";

    if (theta > 0.0) {
        for (int j = 0; j < rays; ++j) {
            const double psi = fan.phase() + j * spacing;
            const Vec2 e0 = hit(psi);
            const Vec2 e1 = hit(psi + theta);
            const double chi0 = (e0 - circle.center).angle();
            const double chi1 = (e1 - circle.center).angle();
            double ccw = std::fmod(chi1 - chi0, 2.0 * std::numbers::pi);
            if (ccw < 0.0) ccw += 2.0 * std::numbers::pi;
            const int large_arc = ccw > std::numbers::pi ? 1 : 0;
            out += "<path class=\"sector\" d=\"M " + fmt6(fan.p().x) + " " + fmt6(fan.p().y) +
                   " L " + fmt6(e0.x) + " " + fmt6(e0.y) + " A " + fmt6(r) + " " + fmt6(r) +
                   " 0 " + std::to_string(large_arc) + " 1 " + fmt6(e1.x) + " " + fmt6(e1.y) +
                   " Z\"/>\n";
        }
    }

    for (int pass = 0; pass < 2; ++pass) {
        const double offset = pass == 0 ? 0.0 : theta;
        const char* cls = pass == 0 ? "chord-start" : "chord-end";
        for (int k = 0; k < fan.n(); ++k) {
            const double psi = fan.phase() + k * spacing + offset;
            const Vec2 a = hit(psi + std::numbers::pi);
            const Vec2 b = hit(psi);
            out += std::string("<line class=\"") + cls + "\"";
            append_attr(out, "x1", a.x);
            append_attr(out, "y1", a.y);
            append_attr(out, "x2", b.x);
            append_attr(out, "y2", b.y);
            out += "/>\n";
        }
    }

    out += "<circle class=\"marker\"";
    append_attr(out, "cx", circle.center.x);
    append_attr(out, "cy", circle.center.y);
    append_attr(out, "r", 0.018 * r);
    out += "/>\n";
    out += "<circle class=\"marker\"";
    append_attr(out, "cx", fan.p().x);
    append_attr(out, "cy", fan.p().y);
    append_attr(out, "r", 0.018 * r);
    out += "/>\n";
    out += "</g>\n";

    if (options.labels) {
        out += "<text class=\"label\"";
        append_attr(out, "x", circle.center.x + 0.030 * r);
        append_attr(out, "y", -circle.center.y - 0.030 * r);
        out += ">C</text>\n";
        out += "<text class=\"label\"";
        append_attr(out, "x", fan.p().x + 0.030 * r);
        append_attr(out, "y", -fan.p().y - 0.030 * r);
        out += ">P</text>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace cruxgeom
