/*
 * Report assembly for the CLI: named checks with pass/fail status and a
 * JSON payload, an optional findings section, and deterministic rendering
 * (checks sorted by name; only the elapsed fields vary between runs).
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace heisvc::cli {

struct Check {
    std::string name;
    bool passed = true;
    nlohmann::json data;
    double elapsed_ms = 0.0;
};

struct Report {
    std::string command;
    std::vector<Check> checks;
    nlohmann::json findings = nlohmann::json::array();

    bool all_passed() const;
    void sort_checks();
    nlohmann::json to_json() const;
    std::string to_text() const;
};

/// Runs fn, records elapsed time, and turns any exception into a failed
/// check carrying the error text.
Check timed_check(const std::string& name,
                  const std::function<nlohmann::json(bool& passed)>& fn);

}  // namespace heisvc::cli
