#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "frob/core_arith.hpp"
#include "frob/errors.hpp"
#include "frob/lattice_region.hpp"

namespace frob {

struct render_options {
    double scale = 40.0; // pixels per lattice unit
    bool show_values = false;
    std::vector<lattice_point> highlight;
};

namespace detail {

inline std::string fmt2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace detail

// The region diagram as SVG 1.1 text: green/blue/red markers (class-tagged
// so they can be counted by parsing), the lines a*x + b*y = a*b and = 0,
// and the dashed cutoff a*x + b*y = b. Output is byte-identical for
// identical inputs. The y axis points up.
inline std::string render_region_svg(const coprime_pair& pair, const render_options& opts = {}) {
    if (opts.scale <= 0) {
        throw domain_error("render_region_svg: scale must be positive");
    }
    const int64 a = pair.a();
    const int64 b = pair.b();
    if (int128(a) * b > 5000) {
        throw resource_error("render_region_svg: a*b exceeds the 5000-point legibility cap");
    }
    const region reg = enumerate_region(pair);

    const double s = opts.scale;
    const double margin = 1.0;
    const double width = (static_cast<double>(b) + 2 * margin) * s;
    const double height = (2.0 * static_cast<double>(a) + 2 * margin) * s;
    const auto px = [&](double x) { return (x + margin) * s; };
    const auto py = [&](double y) { return (static_cast<double>(a) + margin - y) * s; };
    using detail::fmt2;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt2(width) +
           "\" height=\"" + fmt2(height) + "\" viewBox=\"0 0 " + fmt2(width) + " " + fmt2(height) +
           "\">\n";
    svg += "  <title>region D for a=" + std::to_string(a) + ", b=" + std::to_string(b) +
           "</title>\n";

    const auto line = [&](const char* cls, double x1, double y1, double x2, double y2,
                          const char* extra) {
        svg += "  <line class=\"" + std::string(cls) + "\" x1=\"" + fmt2(px(x1)) + "\" y1=\"" +
               fmt2(py(y1)) + "\" x2=\"" + fmt2(px(x2)) + "\" y2=\"" + fmt2(py(y2)) + "\"" + extra +
               "/>\n";
    };
    // a*x + b*y = a*b through (0, a) and (b, 0); = 0 through (0, 0) and
    // (b, -a); the cutoff = b through (0, 1) and (b, 1 - a).
    line("line-ab", 0, static_cast<double>(a), static_cast<double>(b), 0,
         " stroke=\"#555555\" stroke-width=\"1.5\"");
    line("line-zero", 0, 0, static_cast<double>(b), -static_cast<double>(a),
         " stroke=\"#555555\" stroke-width=\"1.5\"");
    line("line-cutoff", 0, 1, static_cast<double>(b), 1.0 - static_cast<double>(a),
         " stroke=\"#e08020\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");

    const auto markers = [&](const std::vector<lattice_point>& pts, const char* cls,
                             const char* fill) {
        for (const lattice_point& p : pts) {
            svg += "  <circle class=\"" + std::string(cls) + "\" cx=\"" +
                   fmt2(px(static_cast<double>(p.x))) + "\" cy=\"" +
                   fmt2(py(static_cast<double>(p.y))) + "\" r=\"" + fmt2(0.18 * s) +
                   "\" fill=\"" + fill + "\"/>\n";
        }
    };
    markers(reg.green, "green", "#2f9e44");
    markers(reg.blue, "blue", "#1c7ed6");
    markers(reg.red, "red", "#e03131");

    for (const lattice_point& p : opts.highlight) {
        svg += "  <circle class=\"highlight\" cx=\"" + fmt2(px(static_cast<double>(p.x))) +
               "\" cy=\"" + fmt2(py(static_cast<double>(p.y))) + "\" r=\"" + fmt2(0.34 * s) +
               "\" fill=\"none\" stroke=\"#f59f00\" stroke-width=\"" + fmt2(0.08 * s) + "\"/>\n";
    }

    if (opts.show_values) {
        const auto labels = [&](const std::vector<lattice_point>& pts) {
            for (const lattice_point& p : pts) {
                svg += "  <text class=\"value\" x=\"" +
                       fmt2(px(static_cast<double>(p.x)) + 0.22 * s) + "\" y=\"" +
                       fmt2(py(static_cast<double>(p.y)) - 0.22 * s) + "\" font-size=\"" +
                       fmt2(0.3 * s) + "\">" + std::to_string(linear_form(pair, p)) + "</text>\n";
            }
        };
        labels(reg.green);
        labels(reg.blue);
        labels(reg.red);
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace frob
