#include "maxren/conformance.hpp"

#include <cmath>

#include "json.hpp"

namespace maxren::conformance {

void Report::add_hard(const std::string& name, double deviation, double tol,
                      const std::string& note) {
    checks.push_back({name, deviation, tol, std::abs(deviation) <= tol, true, note});
}

void Report::add_soft(const std::string& name, double deviation, double tol,
                      const std::string& note) {
    checks.push_back({name, deviation, tol, std::abs(deviation) <= tol, false, note});
}

void Report::merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::hard_pass() const {
    for (const auto& c : checks)
        if (c.hard && !c.pass) return false;
    return true;
}

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.hard && !c.pass) ++n;
    return n;
}

std::string Report::to_json(int indent) const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json item;
        item["identity_name"] = c.name;
        item["max_abs_deviation"] = c.max_abs_deviation;
        item["pass"] = c.pass;
        item["tolerance"] = c.tolerance;
        item["hard"] = c.hard;
        if (!c.note.empty()) item["note"] = c.note;
        arr.push_back(item);
    }
    return arr.dump(indent);
}

}  // namespace maxren::conformance
