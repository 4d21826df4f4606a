#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "coxwitness/report.hpp"

namespace coxwitness::cli {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string group;
    std::string sigma_path;
    std::string parabolic;
    std::string out_path;
    bool json = false;
    bool first = false;
    bool has_parabolic = false;
    std::uint64_t seed = 1;
    int samples = 200;
    int n = 0;
};

/// What a command produced: the JSON result, its text rendering, and whether it verified.
struct Outcome {
    std::string command;
    std::string group;
    Json result = Json::object();
    std::string text;
    /// Verification commands report verified/failed; tables report ok.
    bool verification = false;
    bool verified = true;
    std::string failure;  // the first failing identity
};

/// The report body for `o.json` or text.
std::string render(const Outcome& out, const Options& o);
/// Writes the report (to `o.out_path` or `out`), names any failing identity on `err`,
/// and returns the exit code.
int finish(const Outcome& outcome, const Options& o, std::ostream& out, std::ostream& err);
/// Full command line handling.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace coxwitness::cli
