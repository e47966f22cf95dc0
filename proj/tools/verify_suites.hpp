/*
 * The verify-all suites: brute-force group checks, action/isotropy
 * properties, fixed-point census counts, and the homology cross-checks,
 * plus the normalizer findings section.
 */

#pragma once

#include "heisvc/cyclic.hpp"
#include "report.hpp"

namespace heisvc::cli {

std::vector<Check> group_suite(Int bound);
std::vector<Check> action_suite(Int bound);
std::vector<Check> census_suite(Int bound);
std::vector<Check> homology_suite();

/// Conjugacy classes in the ball whose normalizer strictly exceeds the
/// center-times-generator lattice, reported with their index.
nlohmann::json normalizer_findings(Int bound);

}  // namespace heisvc::cli
