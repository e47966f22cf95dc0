#include "report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "heisvc/version.hpp"

namespace heisvc::cli {

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.passed; });
}

void Report::sort_checks() {
    std::sort(checks.begin(), checks.end(),
              [](const Check& a, const Check& b) { return a.name < b.name; });
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["tool"] = "heisvc";
    j["version"] = kVersion;
    j["command"] = command;
    j["findings"] = findings;
    nlohmann::json arr = nlohmann::json::array();
    for (const Check& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["status"] = c.passed ? "pass" : "fail";
        jc["data"] = c.data;
        jc["elapsed_ms"] = c.elapsed_ms;
        arr.push_back(std::move(jc));
    }
    j["checks"] = std::move(arr);
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "heisvc " << kVersion << " — " << command << "\n";
    for (const Check& c : checks) {
        os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
        if (!c.data.is_null()) os << "  " << c.data.dump();
        os << "  (" << c.elapsed_ms << " ms)\n";
    }
    if (!findings.empty()) {
        os << "findings (informational, not failures):\n";
        for (const auto& f : findings) os << "  " << f.dump() << "\n";
    }
    os << (all_passed() ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    return os.str();
}

Check timed_check(const std::string& name,
                  const std::function<nlohmann::json(bool& passed)>& fn) {
    Check c;
    c.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
        c.data = fn(c.passed);
    } catch (const std::exception& e) {
        c.passed = false;
        c.data = {{"error", e.what()}};
    }
    auto stop = std::chrono::steady_clock::now();
    c.elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    return c;
}

}  // namespace heisvc::cli
