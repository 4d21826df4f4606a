#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace coxwitness;
using namespace coxwitness::cli;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "coxwitness");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("shapes B2 --json lists 4 shapes")
{
    auto r = invoke({"shapes", "B2", "--json"});
    REQUIRE(r.code == kExitOk);
    auto j = Json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["tool"] == "coxwitness");
    CHECK(j["status"] == "ok");
    CHECK(j["result"]["shapes"].size() == 4);
    CHECK(j["result"]["count"] == 4);
    CHECK(j["result"]["shapes"][3]["S_lambda"] == Json::array({3}));
    CHECK(j["result"]["shapes"][3]["class_reps"].size() == 2);
    CHECK(j["result"]["shapes"][1]["orbit_size"] == 2);
}

TEST_CASE("verify conjecture A2 is verified over 3 shapes")
{
    auto r = invoke({"verify", "conjecture", "A2", "--json"});
    REQUIRE(r.code == kExitOk);
    auto j = Json::parse(r.out);
    CHECK(j["status"] == "verified");
    CHECK(j["result"]["shapes"].size() == 3);
    for (const auto& s : j["result"]["shapes"])
        CHECK(s["status"] == "verified");
}

TEST_CASE("verify rel B3 --parabolic 1,2 is verified")
{
    auto r = invoke({"verify", "rel", "B3", "--parabolic", "1,2", "--json"});
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(r.out)["status"] == "verified");
}

TEST_CASE("A1 idempotents text shows the n-coefficients of e_S")
{
    auto r = invoke({"idempotents", "A1"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("e_S = {x_∅: -1/2, x_S: 1}") != std::string::npos);
    CHECK(r.out.find("e_∅ = {x_∅: 1/2}") != std::string::npos);
}

TEST_CASE("os and characters tables for A2")
{
    auto os = invoke({"os", "A2", "--json"});
    REQUIRE(os.code == kExitOk);
    auto j = Json::parse(os.out);
    CHECK(j["result"]["degrees"] == Json::array({1, 3, 2}));
    REQUIRE(j["result"]["shapes"].size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(j["result"]["shapes"][i]["dim"] == Json::array({1, 3, 2})[i]);
    CHECK(j["result"]["dim"] == 6);

    auto ch = invoke({"characters", "A2", "--json"});
    REQUIRE(ch.code == kExitOk);
    auto c = Json::parse(ch.out);
    CHECK(c["result"]["shapes"].size() == 3);
    CHECK(c["result"]["class_reps"] == Json::array({"1", "s1", "s1s2"}));
}

TEST_CASE("verify section5, section6 and lemmas exit 0")
{
    CHECK(invoke({"verify", "section5", "3"}).code == kExitOk);
    CHECK(invoke({"verify", "section6", "3"}).code == kExitOk);
    auto r = invoke({"verify", "lemmas", "A2", "--seed", "4", "--samples", "10", "--json"});
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(r.out)["result"]["data"]["samples"].get<int>() > 0);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(invoke({}).code == kExitUsage);
    CHECK(invoke({"frobnicate", "A2"}).code == kExitUsage);
    CHECK(invoke({"shapes"}).code == kExitUsage);
    CHECK(invoke({"shapes", "Q7"}).code == kExitUsage);
    CHECK(invoke({"shapes", "I2(1)"}).code == kExitUsage);
    CHECK(invoke({"verify"}).code == kExitUsage);
    CHECK(invoke({"verify", "section5", "9"}).code == kExitUsage);
    CHECK(invoke({"verify", "section6", "x"}).code == kExitUsage);
    CHECK(invoke({"verify", "rel", "B3", "--parabolic", "4"}).code == kExitUsage);
    CHECK(invoke({"verify", "rel", "B3", "--parabolic", "a"}).code == kExitUsage);
    auto r = invoke({"verify", "rel", "B3", "--parabolic", "2,3"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("not of type A") != std::string::npos);
    CHECK(invoke({"idempotents", "A2", "--sigma", "/nonexistent/sigma.json"}).code == kExitUsage);
}

TEST_CASE("sigma file is applied and validated")
{
    const std::string good = "cli_test_sigma_good.json";
    const std::string bad = "cli_test_sigma_bad.json";
    std::ofstream(good) << R"({"default": "1", "overrides": {"0b11": "3/2"}})";
    std::ofstream(bad) << R"({"default": "-1"})";
    auto r = invoke({"idempotents", "A2", "--sigma", good, "--json"});
    CHECK(r.code == kExitOk);
    auto shapes = Json::parse(r.out)["result"]["shape_classes"];
    CHECK(shapes.back()["sigma"] == "3/2");
    CHECK(invoke({"verify", "conjecture", "A2", "--sigma", good}).code == kExitOk);
    CHECK(invoke({"idempotents", "A2", "--sigma", bad}).code == kExitUsage);
    std::remove(good.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("a failed verification exits 1 and names the identity")
{
    Outcome o;
    o.command = "verify lemmas";
    o.group = "A1";
    o.verification = true;
    o.verified = false;
    o.failure = "sum of e_lambda = 1";
    Options opts;
    opts.json = true;
    std::ostringstream out;
    std::ostringstream err;
    CHECK(finish(o, opts, out, err) == kExitFailed);
    CHECK(err.str().find("sum of e_lambda = 1") != std::string::npos);
    auto j = Json::parse(out.str());
    CHECK(j["status"] == "failed");
    CHECK(j["failure"] == "sum of e_lambda = 1");
}

TEST_CASE("an empty verification report is valid and exits 0")
{
    VerificationReport rep;
    rep.kind = "empty";
    CHECK(rep.passed());
    Outcome o;
    o.command = "verify empty";
    o.verification = true;
    o.result = rep.to_json();
    Options opts;
    opts.json = true;
    std::ostringstream out;
    std::ostringstream err;
    CHECK(finish(o, opts, out, err) == kExitOk);
    auto j = Json::parse(out.str());
    CHECK(j["status"] == "verified");
    CHECK(j["result"]["checks"].empty());
}

TEST_CASE("json reports round-trip and repeat byte for byte")
{
    auto a = invoke({"verify", "conjecture", "B2", "--json"});
    auto b = invoke({"verify", "conjecture", "B2", "--json"});
    CHECK(a.out == b.out);
    auto j = Json::parse(a.out);
    CHECK(j.dump(2) + "\n" == a.out);
}

TEST_CASE("--out writes the report to a file")
{
    const std::string path = "cli_test_out.json";
    auto r = invoke({"shapes", "A2", "--json", "--out", path});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(Json::parse(buf.str())["result"]["count"] == 3);
    std::remove(path.c_str());
}
