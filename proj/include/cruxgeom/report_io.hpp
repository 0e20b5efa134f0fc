#pragma once
/**
 * @file report_io.hpp
 * @brief Serialization of verification reports to JSON.
 *
 * The emitter is hand-rolled on purpose: field order is fixed, floats are
 * printed with %.17g (shortest round-trippable form up to 17 significant
 * digits), and no locale or library version can perturb the bytes. Two runs
 * with the same seed and trial count produce identical output except for the
 * wall_time_ms field.
 */

#include <cstdint>
#include <cstdio>
#include <string>

#include "cruxgeom/verify.hpp"

namespace cruxgeom {

/// Formats a double with %.17g: round-trip exact, locale independent.
inline std::string format_float17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace detail {

inline void append_config_json(std::string& out, const TrialConfig& c) {
    out += "{\"px\": ";
    out += format_float17(c.px);
    out += ", \"py\": ";
    out += format_float17(c.py);
    out += ", \"n\": ";
    out += std::to_string(c.n);
    out += ", \"phase\": ";
    out += format_float17(c.phase);
    out += ", \"theta\": ";
    out += format_float17(c.theta);
    out += "}";
}

} // namespace detail

/**
 * Renders the full report as pretty-printed JSON with a fixed field order:
 * seed, trials, generator, checks (each: name, passed, residual, tolerance,
 * config{px, py, n, phase, theta}), wall_time_ms.
 */
inline std::string report_to_json(const VerificationReport& report) {
    std::string out;
    out.reserve(256 + report.checks.size() * 256);
    out += "{\n";
    out += "  \"seed\": " + std::to_string(report.seed) + ",\n";
    out += "  \"trials\": " + std::to_string(report.trials) + ",\n";
    out += "  \"generator\": \"" + report.generator_name + "\",\n";
    out += "  \"checks\": [";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const CheckResult& c = report.checks[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {\"name\": \"" + c.name + "\", \"passed\": ";
        out += c.passed ? "true" : "false";
        out += ", \"residual\": ";
        out += format_float17(c.residual);
        out += ", \"tolerance\": ";
        out += format_float17(c.tolerance);
        out += ", \"config\": ";
        detail::append_config_json(out, c.config);
        out += "}";
    }
    out += report.checks.empty() ? "],\n" : "\n  ],\n";
    out += "  \"wall_time_ms\": " + std::to_string(report.wall_time_ms) + "\n";
    out += "}\n";
    return out;
}

} // namespace cruxgeom
