#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "frob/core_arith.hpp"
#include "frob/engine.hpp"
#include "frob/lattice_region.hpp"
#include "frob/oracle.hpp"

namespace frob {

inline constexpr const char* audit_schema_version = "1";

// One closed-form-vs-oracle comparison for an exceptional triple.
// Disagreements are data, not failures: the sweep is the measurement
// instrument for how far the formula reaches.
struct audit_record {
    int64 a = 0;
    int64 b = 0;
    int64 c = 0;
    case_label label = case_label::non_exceptional;
    candidate_kind candidate = candidate_kind::q_prime_1;
    int64 g_formula = 0;
    int64 g_oracle = 0;
    bool agree = false;
};

struct audit_report {
    int64 a_max = 0;
    int64 b_max = 0;
    std::string version = audit_schema_version;
    std::vector<audit_record> records; // sorted by (a, b, c)
    std::map<case_label, int64> totals;
    std::map<case_label, double> agreement;
};

// One record per exceptional value of the pair, descending c.
inline std::vector<audit_record> audit_pair(const coprime_pair& pair,
                                            int64 budget = default_budget) {
    std::vector<audit_record> out;
    for (const exceptional_value& ev : enumerate_exceptional(pair, budget)) {
        const auto dec = decompose(pair, ev.c);
        if (!dec) {
            throw invariant_error("audit_pair: enumerated exceptional value failed to decompose");
        }
        const case_label label = dispatch(pair, *dec);
        const int64 g_formula = formula_value(pair, *dec, label);
        const generator_set gs({pair.a(), pair.b(), ev.c});
        const int64 g_oracle = frobenius_oracle(gs, budget);
        out.push_back({pair.a(), pair.b(), ev.c, label, winning_candidate(label), g_formula,
                       g_oracle, g_formula == g_oracle});
    }
    return out;
}

// Every coprime pair 2 <= a < b <= b_max with a <= a_max, every exceptional
// c. Output is independent of execution order: records end up sorted by
// (a, b, c) and the aggregates are pure functions of the records.
inline audit_report audit_sweep(int64 a_max, int64 b_max, int64 budget = default_budget) {
    if (a_max > b_max) {
        throw domain_error("audit_sweep: requires a_max <= b_max");
    }
    audit_report report;
    report.a_max = a_max;
    report.b_max = b_max;
    for (int64 a = 2; a <= a_max; ++a) {
        for (int64 b = a + 1; b <= b_max; ++b) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            auto records = audit_pair(coprime_pair(a, b), budget);
            report.records.insert(report.records.end(), records.begin(), records.end());
        }
    }
    std::sort(report.records.begin(), report.records.end(),
              [](const audit_record& lhs, const audit_record& rhs) {
                  return std::tie(lhs.a, lhs.b, lhs.c) < std::tie(rhs.a, rhs.b, rhs.c);
              });
    std::map<case_label, int64> agreeing;
    for (const audit_record& rec : report.records) {
        report.totals[rec.label] += 1;
        if (rec.agree) {
            agreeing[rec.label] += 1;
        }
    }
    for (const auto& [label, total] : report.totals) {
        report.agreement[label] = static_cast<double>(agreeing[label]) / static_cast<double>(total);
    }
    return report;
}

inline nlohmann::ordered_json to_json(const audit_report& report) {
    nlohmann::ordered_json j;
    j["version"] = report.version;
    j["params"] = {{"a_max", report.a_max}, {"b_max", report.b_max}};
    auto records = nlohmann::ordered_json::array();
    for (const audit_record& rec : report.records) {
        records.push_back({{"a", rec.a},
                           {"b", rec.b},
                           {"c", rec.c},
                           {"case", case_label_name(rec.label)},
                           {"candidate", candidate_kind_name(rec.candidate)},
                           {"g_formula", rec.g_formula},
                           {"g_oracle", rec.g_oracle},
                           {"agree", rec.agree}});
    }
    j["records"] = std::move(records);
    auto totals = nlohmann::ordered_json::object();
    auto agreement = nlohmann::ordered_json::object();
    for (const auto& [label, total] : report.totals) {
        totals[case_label_name(label)] = total;
    }
    for (const auto& [label, rate] : report.agreement) {
        agreement[case_label_name(label)] = rate;
    }
    j["totals"] = std::move(totals);
    j["agreement"] = std::move(agreement);
    return j;
}

inline std::string serialize_report(const audit_report& report) {
    return to_json(report).dump(2) + "\n";
}

} // namespace frob
