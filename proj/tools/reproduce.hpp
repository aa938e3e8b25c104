#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace neumaier::repro {

using nlohmann::json;

/// One measured quantity compared against the expected-values table.
struct CheckResult {
    std::string name;
    std::string anchor;
    std::string expected;
    std::string actual;
    bool ok = false;
};

struct SectionReport {
    std::string section;
    std::vector<CheckResult> checks;
    json artifacts = json::object();

    bool ok() const;
};

/// The expected-values table shipped with the tool (parsed once).
const json& expected_values();

/// Runs the full pipeline for one reproduction target and compares
/// every measured quantity against the table. Sections: 4.1, 4.2, 4.3,
/// 4.4, 4.5, 5-tables. `row` filters 5-tables ("n=3", "t1:n=4",
/// "t2:n=3"); `limit` caps the 4.1 permutation sweep (0 = all).
SectionReport run_section(const std::string& section, const std::optional<std::string>& row = {},
                          std::size_t limit = 0);

json report_to_json(const SectionReport& report);

} // namespace neumaier::repro
