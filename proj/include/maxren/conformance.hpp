#pragma once

#include <string>
#include <vector>

namespace maxren::conformance {

/// One named numeric check. `hard` checks gate the verify exit code;
/// soft checks record known source-material discrepancies as warnings.
struct Check {
    std::string name;
    double max_abs_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool hard = true;
    std::string note;
};

struct Report {
    std::vector<Check> checks;

    void add(Check c) { checks.push_back(std::move(c)); }
    void add_hard(const std::string& name, double deviation, double tol,
                  const std::string& note = "");
    void add_soft(const std::string& name, double deviation, double tol,
                  const std::string& note = "");
    void merge(const Report& other);

    /// True iff every hard check passed.
    bool hard_pass() const;
    std::size_t failures() const;

    /// Stable-key-order JSON array of
    /// {identity_name, max_abs_deviation, pass, ...} entries.
    std::string to_json(int indent = 2) const;
};

}  // namespace maxren::conformance
