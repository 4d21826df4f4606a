#include "coxwitness/report.hpp"

#include <algorithm>
#include <sstream>

namespace coxwitness {

void CheckList::add(std::string name, bool passed, std::string detail)
{
    checks_.push_back(Check{std::move(name), passed, std::move(detail)});
}

void CheckList::append(const CheckList& other, const std::string& prefix)
{
    for (const auto& c : other.checks_)
        checks_.push_back(Check{prefix + c.name, c.passed, c.detail});
}

bool CheckList::all_passed() const
{
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* CheckList::first_failure() const
{
    for (const auto& c : checks_)
        if (!c.passed)
            return &c;
    return nullptr;
}

Json CheckList::to_json() const
{
    Json arr = Json::array();
    for (const auto& c : checks_) {
        Json j{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty())
            j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json VerificationReport::to_json() const
{
    const Check* fail = checks.first_failure();
    Json j{{"kind", kind},
           {"group", group},
           {"checks", checks.to_json()},
           {"data", data},
           {"status", passed() ? "verified" : "failed"}};
    if (fail)
        j["first_failure"] = fail->name;
    return j;
}

Json to_json(const Rational& r)
{
    return r.to_string();
}

Json to_json(const CycloNumber& c)
{
    Json coeffs = Json::array();
    auto cs = c.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k)
        if (!cs[k].is_zero())
            coeffs.push_back(Json::array({k, cs[k].to_string()}));
    return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

Json to_json(const ClassFunction& f)
{
    Json arr = Json::array();
    for (const auto& v : f.values())
        arr.push_back(to_json(v));
    return arr;
}

std::string values_string(const ClassFunction& f)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < f.values().size(); ++i)
        os << (i ? ", " : "") << f.values()[i];
    os << ")";
    return os.str();
}

}  // namespace coxwitness
