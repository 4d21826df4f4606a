#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "coxwitness/characters.hpp"
#include "coxwitness/cyclotomic.hpp"
#include "coxwitness/rational.hpp"

namespace coxwitness {

using Json = nlohmann::json;

/// One named identity and whether it held.
struct Check {
    std::string name;
    bool passed = false;
    std::string detail;  // witness or summary; empty when there is nothing to add
};

class CheckList {
public:
    void add(std::string name, bool passed, std::string detail = {});
    /// Appends every check of `other`, prefixing names with `prefix`.
    void append(const CheckList& other, const std::string& prefix = {});
    const std::vector<Check>& checks() const { return checks_; }
    bool all_passed() const;
    /// First failing check, or nullptr.
    const Check* first_failure() const;
    Json to_json() const;

private:
    std::vector<Check> checks_;
};

/// Result of one verifier run: the checks made and any data worth reporting.
struct VerificationReport {
    std::string kind;   // e.g. "section5"
    std::string group;  // diagram label or other input descriptor
    CheckList checks;
    Json data = Json::object();
    bool passed() const { return checks.all_passed(); }
    Json to_json() const;
};

Json to_json(const Rational& r);
/// {"order": n, "coeffs": [[k, "p/q"], ...]} with exponents ascending.
Json to_json(const CycloNumber& c);
/// Values by class index.
Json to_json(const ClassFunction& f);

/// Class function values as short strings, for text tables.
std::string values_string(const ClassFunction& f);

}  // namespace coxwitness
