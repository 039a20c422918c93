#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gec/io.hpp"

namespace gec {

// One verified statement. Bulk randomized checks aggregate into a single
// record whose left value is the observed violation count (expected "0");
// worked examples carry the two compared values.
struct CheckRecord {
    std::string id;
    std::string left;
    std::string right;
    bool pass = false;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckRecord> checks;
    int passed = 0;
    int failed = 0;
};

struct Report {
    unsigned long long seed = 0;
    std::vector<SuiteResult> suites;
    bool all_pass = true;
};

// Canonical suite order; selection via Scenario::suites, absent = all.
const std::vector<std::string>& all_suite_names();

// Runs the selected suites. Unknown suite names and an explicitly empty
// selection are input errors; failed checks are reported, not thrown.
Report run_suites(const Scenario& sc);

nlohmann::json report_to_json(const Report& r);

// Power summary for one scenario: the equivalent power expressions of its
// mode, plus a refinement table when float settings are present or an
// override is given.
nlohmann::json power_report(const Scenario& sc, std::optional<int> refine_override);

}  // namespace gec
