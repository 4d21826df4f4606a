#include <doctest.h>

#include "coxwitness/lemmas.hpp"

using namespace coxwitness;

namespace {

std::string describe(const VerificationReport& rep)
{
    const Check* f = rep.checks.first_failure();
    return f ? f->name + " " + f->detail : "";
}

}  // namespace

TEST_CASE("lemma suite passes on small groups")
{
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "I2(5)", "I2(6)", "A2xA1", "A1xA1xA1", "D4", "H3"}) {
        CAPTURE(std::string(name));
        auto g = CoxeterGroup::build(name);
        GroupContext ctx(g);
        LemmaOptions opts;
        opts.samples = 40;
        auto rep = verify_lemmas(ctx, opts);
        CHECK_MESSAGE(rep.passed(), describe(rep));
        CHECK(rep.data["samples"].get<int>() > 0);
    }
}

TEST_CASE("lemma suite with a non-trivial context sigma")
{
    auto g = CoxeterGroup::build("B3");
    GroupContext ctx(g, random_sigma(g, 7));
    auto rep = verify_lemmas(ctx, {3, 30, 1});
    CHECK_MESSAGE(rep.passed(), describe(rep));
}

TEST_CASE("lemma reports are reproducible for a fixed seed")
{
    auto g = CoxeterGroup::build("A3");
    GroupContext ctx(g);
    auto a = verify_lemmas(ctx, {11, 25, 2}).to_json().dump();
    auto b = verify_lemmas(ctx, {11, 25, 2}).to_json().dump();
    CHECK(a == b);
}

TEST_CASE("random sigma takes values p/q with 1 <= p, q <= 9")
{
    auto g = CoxeterGroup::build("A2");
    auto s = random_sigma(g, 5);
    for (Subset i = 0; i <= g.all_generators(); ++i) {
        Rational v = s(i);
        CHECK(v > Rational(0));
        CHECK(v <= Rational(9));
        CHECK(v >= Rational(1, 9));
    }
    CHECK(random_sigma(g, 5).overrides == s.overrides);
}
