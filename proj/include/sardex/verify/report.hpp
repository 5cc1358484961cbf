#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sardex/numerics/rational.hpp"

namespace sardex::verify {

/// Digits used for metrics in reports.
inline constexpr std::size_t metric_digits = 30;

inline std::string metric_string(const Rational& q) { return to_fixed(q, metric_digits, Rounding::up); }

struct CheckResult {
    static constexpr std::size_t max_details = 10;

    std::string name;
    bool passed = true;
    std::size_t samples = 0;
    std::string metric;       // what worst_metric measures
    Rational worst = 0;       // largest observed value of the metric
    std::string tolerance;    // the bound the metric is held to
    std::vector<nlohmann::json> details;
    std::vector<std::string> notes; // flags that do not fail the check

    void observe(const Rational& value)
    {
        if (value > worst) {
            worst = value;
        }
    }

    /// Records a failing sample together with its reproducer inputs.
    void fail(nlohmann::json detail)
    {
        passed = false;
        if (details.size() < max_details) {
            details.push_back(std::move(detail));
        }
    }

    nlohmann::json to_json() const
    {
        nlohmann::json j{{"name", name},
                         {"status", passed ? "pass" : "fail"},
                         {"samples", samples},
                         {"metric", metric},
                         {"worstMetric", metric_string(worst)},
                         {"tolerance", tolerance},
                         {"details", details}};
        if (!notes.empty()) {
            j["notes"] = notes;
        }
        return j;
    }
};

struct VerificationReport {
    nlohmann::json params;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    double wall_time_ms = 0;

    bool overall() const
    {
        for (const auto& c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }

    /// The report object; wallTimeMs is the only run-dependent field.
    nlohmann::json to_json(bool include_timing = true) const
    {
        nlohmann::json checks_json = nlohmann::json::array();
        for (const auto& c : checks) {
            checks_json.push_back(c.to_json());
        }
        nlohmann::json j{{"params", params}, {"seed", seed}, {"checks", checks_json}, {"overall", overall() ? "pass" : "fail"}};
        if (include_timing) {
            j["wallTimeMs"] = static_cast<std::int64_t>(wall_time_ms);
        }
        return j;
    }
};

} // namespace sardex::verify
