#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "coxwitness/orlik_solomon.hpp"

using namespace coxwitness;

namespace {

OSElement random_element(const OrlikSolomon& os, std::mt19937& rng, int terms)
{
    OSElement x;
    std::uniform_int_distribution<std::size_t> pick(0, os.basis().size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int i = 0; i < terms; ++i)
        x.add(os.basis()[pick(rng)], CycloNumber(coef(rng)));
    return x;
}

}  // namespace

TEST_CASE("graded dimensions")
{
    auto a1 = CoxeterGroup::build("A1");
    Arrangement r1(a1);
    CHECK(OrlikSolomon(r1).degree_dims() == std::vector<int>{1, 1});
    auto a2 = CoxeterGroup::build("A2");
    Arrangement r2(a2);
    CHECK(OrlikSolomon(r2).degree_dims() == std::vector<int>{1, 3, 2});

    // Oracle: dim A^p = #{w : codim Fix(w) = p}.
    for (const char* name : {"A3", "B3", "H3", "D4", "I2(7)", "A2xA1", "A1xA1xA1", "B4", "A5"}) {
        CAPTURE(name);
        auto g = CoxeterGroup::build(name);
        Arrangement arr(g);
        OrlikSolomon os(arr);
        std::vector<int> expect(static_cast<std::size_t>(g.rank()) + 1);
        for (int w = 0; w < g.size(); ++w)
            ++expect[arr.lattice(arr.fix_of(w)).codim];
        CHECK(os.degree_dims() == expect);
        CHECK(static_cast<int>(os.basis().size()) == g.size());
        for (int x = 0; x < arr.num_lattice(); ++x) {
            int cusp = 0;
            for (int w : arr.pointwise_stabilizer(x))
                cusp += arr.fix_of(w) == x;
            CHECK(static_cast<int>(os.flat_basis(x).size()) == cusp);
        }
    }
}

TEST_CASE("straightening")
{
    auto a2 = CoxeterGroup::build("A2");
    Arrangement arr(a2);
    OrlikSolomon os(arr);
    CHECK(os.straighten({0, 0}).is_zero());
    auto x = os.straighten({1, 0});
    REQUIRE(x.terms.size() == 1);
    CHECK(x.terms.at(0b011) == CycloNumber(-1));
    auto y = os.straighten({1, 2});
    OSElement expect;
    expect.add(0b101, CycloNumber(1));
    expect.add(0b011, CycloNumber(-1));
    CHECK(y == expect);
    CHECK(os.straighten({0, 1, 2}).is_zero());
    CHECK(os.is_nbc(0b011));
    CHECK(!os.is_nbc(0b110));
    CHECK(!os.is_independent(0b111));
    // ∂ relation: a_1 a_2 - a_0 a_2 + a_0 a_1 = 0
    auto rel = os.straighten({1, 2}) - os.straighten({0, 2}) + os.straighten({0, 1});
    CHECK(rel.is_zero());
}

TEST_CASE("W-action")
{
    std::mt19937 rng(7);
    for (const char* name : {"A2", "B3", "H3", "A2xA1"}) {
        CAPTURE(name);
        auto g = CoxeterGroup::build(name);
        Arrangement arr(g);
        OrlikSolomon os(arr);
        std::uniform_int_distribution<int> elem(0, g.size() - 1);
        for (int trial = 0; trial < 40; ++trial) {
            auto x = random_element(os, rng, 3);
            auto y = random_element(os, rng, 3);
            int w = elem(rng);
            int v = elem(rng);
            CHECK(os.act(0, x) == x);
            CHECK(os.act(w, os.act(g.inv(w), x)) == x);
            CHECK(os.act(g.mul(w, v), x) == os.act(w, os.act(v, x)));
            CHECK(os.act(w, os.product(x, y)) == os.product(os.act(w, x), os.act(w, y)));
        }
        // w·A_X = A_{w(X)}
        for (int x = 0; x < arr.num_lattice(); ++x) {
            int w = elem(rng);
            int wx = arr.find(arr.translate(w, arr.lattice(x).reflections));
            for (int i : os.flat_basis(x)) {
                OSElement b;
                b.add(os.basis()[i], CycloNumber(1));
                for (const auto& [m, c] : os.act(w, b).terms)
                    CHECK(os.flat_of(m) == wx);
            }
        }
    }
    auto a2 = CoxeterGroup::build("A2");
    Arrangement arr(a2);
    OrlikSolomon os(arr);
    auto as = os.monomial({0});
    CHECK(os.act(a2.generator(0), as) == as);
}

TEST_CASE("characters do not depend on the hyperplane order")
{
    for (const char* name : {"A3", "B3", "H3"}) {
        CAPTURE(name);
        auto g = CoxeterGroup::build(name);
        Arrangement arr(g);
        OrlikSolomon os(arr);
        std::vector<int> rev(static_cast<std::size_t>(g.num_positive_roots()));
        std::iota(rev.rbegin(), rev.rend(), 0);
        OrlikSolomon alt(arr, rev);
        ClassFunction sum(g);
        for (const auto& sh : arr.shapes()) {
            auto chi = os.shape_character(sh.id);
            CHECK(chi == alt.shape_character(sh.id));
            CHECK(chi.degree() == CycloNumber(sh.preimage_size));
            sum += chi;
        }
        CHECK(sum == os.total_character());
        CHECK(os.degree_character(0) == ClassFunction::trivial(g));
    }
    auto a1 = CoxeterGroup::build("A1");
    Arrangement r1(a1);
    CHECK(OrlikSolomon(r1).degree_character(1) == ClassFunction::trivial(a1));
}

TEST_CASE("A2 top shape character")
{
    auto a2 = CoxeterGroup::build("A2");
    Arrangement arr(a2);
    OrlikSolomon os(arr);
    auto chi = os.shape_character(2);
    for (int c = 0; c < a2.num_classes(); ++c) {
        int w = a2.class_rep(c);
        int expect = a2.element_order(w) == 1 ? 2 : (a2.element_order(w) == 2 ? 0 : -1);
        CHECK(chi.at_class(c) == CycloNumber(expect));
    }
}
