#pragma once

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frob/audit.hpp"
#include "frob/core_arith.hpp"
#include "frob/engine.hpp"
#include "frob/errors.hpp"
#include "frob/lattice_region.hpp"
#include "frob/oracle.hpp"
#include "frob/viz.hpp"

namespace frob {

// exit 0 = success, 2 = domain error, 3 = resource error, 4 = internal
// invariant violation. stdout carries data; diagnostics go to `err`.
struct command_result {
    int exit_code = 0;
    std::string stdout_payload;
};

namespace detail {

inline int64 env_budget(std::ostream& err, bool& ok) {
    ok = true;
    const char* raw = std::getenv("FROB_BUDGET");
    if (raw == nullptr || *raw == '\0') {
        return default_budget;
    }
    char* end = nullptr;
    const long long v = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || v <= 0) {
        err << "FROB_BUDGET must be a positive integer, got \"" << raw << "\"\n";
        ok = false;
        return default_budget;
    }
    return static_cast<int64>(v);
}

inline lattice_point parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw domain_error("expected a point as x,y: " + text);
    }
    try {
        std::size_t used = 0;
        const int64 x = std::stoll(text.substr(0, comma), &used);
        if (used != comma) {
            throw std::invalid_argument(text);
        }
        const std::string rest = text.substr(comma + 1);
        const int64 y = std::stoll(rest, &used);
        if (used != rest.size()) {
            throw std::invalid_argument(text);
        }
        return {x, y};
    } catch (const std::exception&) {
        throw domain_error("expected a point as x,y: " + text);
    }
}

inline void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw resource_error("cannot open output file: " + path);
    }
    out << data;
    if (!out) {
        throw resource_error("failed while writing output file: " + path);
    }
}

inline std::array<int64, 3> sorted_triple(int64 a, int64 b, int64 c) {
    std::array<int64, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace detail

inline command_result run(const std::vector<std::string>& argv, std::ostream& err = std::cerr) {
    std::ostringstream out;

    CLI::App app{"Frobenius numbers of two- and three-generator numerical semigroups"};
    app.name("frob");
    app.require_subcommand(1);

    int64 two_a = 0, two_b = 0;
    auto* cmd_two = app.add_subcommand("two", "Frobenius number of a coprime pair");
    cmd_two->add_option("a", two_a, "first generator")->required();
    cmd_two->add_option("b", two_b, "second generator")->required();

    int64 three_a = 0, three_b = 0, three_c = 0;
    std::string method = "formula";
    bool explain = false;
    auto* cmd_three = app.add_subcommand("three", "Frobenius number of a coprime triple");
    cmd_three->add_option("a", three_a, "first generator")->required();
    cmd_three->add_option("b", three_b, "second generator")->required();
    cmd_three->add_option("c", three_c, "third generator")->required();
    cmd_three->add_option("--method", method, "formula, oracle, or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    cmd_three->add_flag("--explain", explain, "print the decomposition, case, and winning candidate");

    int64 exc_a = 0, exc_b = 0;
    bool exc_json = false;
    auto* cmd_exc = app.add_subcommand("exceptional", "enumerate the exceptional values of a pair");
    cmd_exc->add_option("a", exc_a, "first generator")->required();
    cmd_exc->add_option("b", exc_b, "second generator")->required();
    cmd_exc->add_flag("--json", exc_json, "emit JSON");

    int64 cls_a = 0, cls_b = 0, cls_x = 0, cls_y = 0;
    auto* cmd_cls = app.add_subcommand("classify", "color and value of a lattice point");
    cmd_cls->add_option("a", cls_a, "first generator")->required();
    cmd_cls->add_option("b", cls_b, "second generator")->required();
    cmd_cls->add_option("x", cls_x, "point x")->required();
    cmd_cls->add_option("y", cls_y, "point y")->required();

    int64 sel_a = 0, sel_h = 0, sel_d = 0;
    auto* cmd_sel = app.add_subcommand("selmer", "Frobenius number of the family (a, ha+d, ha+2d)");
    cmd_sel->add_option("a", sel_a, "smallest generator")->required();
    cmd_sel->add_option("hmult", sel_h, "family multiplier h")->required();
    cmd_sel->add_option("d", sel_d, "family step")->required();

    int64 audit_a_max = 0, audit_b_max = 0;
    std::string audit_out;
    auto* cmd_audit = app.add_subcommand("audit", "sweep closed form vs oracle, emit a JSON report");
    cmd_audit->add_option("--a-max", audit_a_max, "largest smaller generator")->required();
    cmd_audit->add_option("--b-max", audit_b_max, "largest larger generator")->required();
    cmd_audit->add_option("--out", audit_out, "write the report to a file instead of stdout");

    int64 plot_a = 0, plot_b = 0;
    std::string plot_out;
    std::vector<std::string> plot_highlight;
    double plot_scale = 40.0;
    bool plot_values = false;
    auto* cmd_plot = app.add_subcommand("plot", "render the region diagram as SVG");
    cmd_plot->add_option("a", plot_a, "first generator")->required();
    cmd_plot->add_option("b", plot_b, "second generator")->required();
    cmd_plot->add_option("--out", plot_out, "write the SVG to a file instead of stdout");
    cmd_plot->add_option("--highlight", plot_highlight, "ring a point given as x,y (repeatable)");
    cmd_plot->add_option("--scale", plot_scale, "pixels per lattice unit");
    cmd_plot->add_flag("--show-values", plot_values, "annotate each point with its value");

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return {0, out.str()};
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return {2, out.str()};
    }

    bool budget_ok = true;
    const int64 budget = detail::env_budget(err, budget_ok);
    if (!budget_ok) {
        return {2, out.str()};
    }

    try {
        if (cmd_two->parsed()) {
            if (two_a > two_b) {
                std::swap(two_a, two_b);
            }
            const coprime_pair pair(two_a, two_b);
            out << "g(" << pair.a() << ", " << pair.b() << ") = " << frobenius_two(pair) << "\n";
        } else if (cmd_three->parsed()) {
            const auto t = detail::sorted_triple(three_a, three_b, three_c);
            const std::string echo =
                "g(" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
                std::to_string(t[2]) + ")";
            std::optional<int64> g_formula;
            std::optional<int64> g_oracle;
            if (method != "oracle") {
                g_formula = closed_form_g3(t[0], t[1], t[2]);
            }
            if (method != "formula") {
                const generator_set gs({t[0], t[1], t[2]});
                g_oracle = frobenius_oracle(gs, budget);
            }
            if (explain) {
                const int64 d = std::gcd(t[0], t[1]);
                if (d > 1) {
                    out << "gcd(" << t[0] << ", " << t[1] << ") = " << d
                        << ": reduce via g = " << d << "*g(" << t[0] / d << ", " << t[1] / d
                        << ", " << t[2] << ") + " << t[2] << "*" << d - 1 << "\n";
                } else if (t[2] == t[1]) {
                    out << "duplicate generator: g equals the two-generator value\n";
                } else {
                    const coprime_pair pair(t[0], t[1]);
                    const auto dec = decompose(pair, t[2]);
                    if (!dec) {
                        out << "c = " << t[2]
                            << " is not exceptional: g equals the two-generator value "
                            << frobenius_two(pair) << "\n";
                    } else {
                        out << "c = " << t[2] << " = " << dec->l << "*" << pair.b() << " - "
                            << dec->h << "*" << pair.a() << "  (h=" << dec->h << ", l=" << dec->l
                            << ", q=" << dec->q << ", r=" << dec->r << ")\n";
                        const case_label label = dispatch(pair, *dec);
                        out << "case: " << case_label_name(label) << "\n";
                        const candidate_kind kind = winning_candidate(label);
                        for (const candidate_point& cand : candidate_points(pair, *dec)) {
                            if (cand.kind == kind) {
                                out << "winning candidate: " << candidate_kind_name(kind)
                                    << " at (u=" << cand.u << ", v=" << cand.v << "), point "
                                    << uv_to_xy(pair, cand.u, cand.v) << ", value "
                                    << cand.value_xy << "\n";
                            }
                        }
                    }
                }
            }
            if (method == "formula") {
                out << echo << " = " << *g_formula << "\n";
            } else if (method == "oracle") {
                out << echo << " = " << *g_oracle << "\n";
            } else {
                out << echo << " = " << *g_formula << " [formula]\n";
                out << echo << " = " << *g_oracle << " [oracle]\n";
                if (*g_formula != *g_oracle) {
                    err << "warning: formula and oracle disagree for " << echo << "\n";
                }
            }
        } else if (cmd_exc->parsed()) {
            if (exc_a > exc_b) {
                std::swap(exc_a, exc_b);
            }
            const coprime_pair pair(exc_a, exc_b);
            const auto values = enumerate_exceptional(pair, budget);
            const int64 count = count_exceptional(pair);
            if (static_cast<int64>(values.size()) != count) {
                throw invariant_error("exceptional: enumeration and closed-form count disagree");
            }
            if (exc_json) {
                nlohmann::ordered_json j;
                j["a"] = pair.a();
                j["b"] = pair.b();
                j["count"] = count;
                auto list = nlohmann::ordered_json::array();
                for (const exceptional_value& ev : values) {
                    list.push_back({{"c", ev.c}, {"x", ev.point.x}, {"y", ev.point.y}});
                }
                j["exceptional"] = std::move(list);
                out << j.dump(2) << "\n";
            } else {
                out << count << (count == 1 ? " exceptional value for (" : " exceptional values for (")
                    << pair.a() << ", " << pair.b() << ")\n";
                for (const exceptional_value& ev : values) {
                    out << ev.c << " at " << ev.point << "\n";
                }
            }
        } else if (cmd_cls->parsed()) {
            const coprime_pair pair(cls_a, cls_b);
            const lattice_point p{cls_x, cls_y};
            const int64 value = linear_form(pair, p);
            out << p << ": " << point_color_name(classify_point(pair, p))
                << ", a*x + b*y = " << value << "\n";
        } else if (cmd_sel->parsed()) {
            const int64 g = selmer_g(sel_a, sel_h, sel_d);
            const selmer_family_triple t = selmer_triple(sel_a, sel_h, sel_d);
            out << "g(" << t.a << ", " << t.b << ", " << t.c << ") = " << g << "\n";
        } else if (cmd_audit->parsed()) {
            const audit_report report = audit_sweep(audit_a_max, audit_b_max, budget);
            const std::string payload = serialize_report(report);
            if (audit_out.empty()) {
                out << payload;
            } else {
                detail::write_file(audit_out, payload);
                err << "wrote " << report.records.size() << " records to " << audit_out << "\n";
            }
        } else if (cmd_plot->parsed()) {
            const coprime_pair pair(plot_a, plot_b);
            render_options opts;
            opts.scale = plot_scale;
            opts.show_values = plot_values;
            for (const std::string& text : plot_highlight) {
                opts.highlight.push_back(detail::parse_point(text));
            }
            const std::string svg = render_region_svg(pair, opts);
            if (plot_out.empty()) {
                out << svg;
            } else {
                detail::write_file(plot_out, svg);
                err << "wrote SVG to " << plot_out << "\n";
            }
        }
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return {2, out.str()};
    } catch (const resource_error& e) {
        err << "error: " << e.what() << "\n";
        return {3, out.str()};
    } catch (const invariant_error& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return {4, out.str()};
    }
    return {0, out.str()};
}

} // namespace frob
