#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxwitness/arrangement.hpp"
#include "coxwitness/descent.hpp"

using namespace coxwitness;

namespace {

int count_partitions(int n, int max)
{
    if (n == 0)
        return 1;
    int c = 0;
    for (int k = std::min(n, max); k >= 1; --k)
        c += count_partitions(n - k, k);
    return c;
}

}  // namespace

TEST_CASE("shapes of small groups")
{
    auto a2 = CoxeterGroup::build("A2");
    Arrangement arr(a2);
    CHECK(arr.shapes().size() == 3);
    CHECK(arr.shape(0).codim == 0);
    CHECK(arr.shape(0).s_lambda == std::vector<Subset>{0});
    CHECK(arr.shape(0).members.size() == 1);
    CHECK(arr.shape_of(0) == 0);
    CHECK(arr.shape(arr.shape_of(a2.generator(0))).codim == 1);

    auto b2 = CoxeterGroup::build("B2");
    Arrangement ab(b2);
    REQUIRE(ab.shapes().size() == 4);
    CHECK(ab.shape(1).s_lambda == std::vector<Subset>{0b01});
    CHECK(ab.shape(2).s_lambda == std::vector<Subset>{0b10});

    // Oracle: shapes of A_{n-1} are the partitions of n.
    for (int n = 2; n <= 6; ++n) {
        auto g = CoxeterGroup::build("A" + std::to_string(n - 1));
        CHECK(Arrangement(g).shapes().size() == static_cast<std::size_t>(count_partitions(n, n)));
    }
    CHECK(Arrangement(CoxeterGroup::build("B3")).shapes().size() == 7);
}

TEST_CASE("lattice invariants")
{
    for (const char* name : {"A3", "B3", "H3", "I2(6)", "A1xA1", "D4"}) {
        CAPTURE(name);
        auto g = CoxeterGroup::build(name);
        Arrangement arr(g);
        int total = 0;
        for (const auto& sh : arr.shapes()) {
            total += sh.preimage_size;
            for (int m : sh.members)
                CHECK(arr.lattice(m).codim == sh.codim);
            CHECK(std::find(sh.members.begin(), sh.members.end(), arr.lattice_of_subset(sh.canonical))
                  != sh.members.end());
            // |sh⁻¹(λ)| = |W : N_W(W_X)| · #cuspidal elements of W_X
            int x = arr.lattice_of_subset(sh.canonical);
            int cusp = 0;
            for (int w : arr.pointwise_stabilizer(x))
                cusp += arr.fix_of(w) == x;
            CHECK(sh.preimage_size == g.size() / static_cast<int>(arr.setwise_stabilizer(x).size()) * cusp);
            auto cs = arr.cuspidal_structure(sh.id);
            CHECK(cs.bijection);
            CHECK(cs.counting);
        }
        CHECK(total == g.size());
        for (int c = 0; c < g.num_classes(); ++c)
            for (int w : g.class_members(c))
                CHECK(arr.shape_of(w) == arr.shape_of(g.class_rep(c)));
        // The subset classes from Δ-conjugacy agree with the lattice orbits.
        DescentAlgebra da(g);
        REQUIRE(da.shape_classes().size() == arr.shapes().size());
        for (std::size_t k = 0; k < arr.shapes().size(); ++k)
            CHECK(da.shape_classes()[k] == arr.shape(static_cast<int>(k)).s_lambda);
        // w W_X w⁻¹ = W_{w(X)} on reflection sets.
        for (int i = 0; i < arr.num_lattice(); ++i) {
            std::set<int> conj;
            int w = static_cast<int>(i * 7 % g.size());
            for (int y : arr.pointwise_stabilizer(i))
                conj.insert(g.conjugate(w, y));
            int wx = arr.find(arr.translate(w, arr.lattice(i).reflections));
            REQUIRE(wx >= 0);
            auto target = arr.pointwise_stabilizer(wx);
            CHECK(conj == std::set<int>(target.begin(), target.end()));
        }
    }
}

TEST_CASE("centralizers of cuspidal elements")
{
    for (const char* name : {"A3", "B3", "H3"}) {
        CAPTURE(name);
        auto g = CoxeterGroup::build(name);
        Arrangement arr(g);
        for (int c = 0; c < g.num_classes(); ++c) {
            int w = g.class_rep(c);
            int x = arr.fix_of(w);
            auto z = g.centralizer(w);
            auto n = arr.setwise_stabilizer(x);
            std::set<int> nset(n.begin(), n.end());
            for (int y : z)
                CHECK(nset.count(y));
            std::set<int> prod;
            for (int y : z)
                for (int v : arr.pointwise_stabilizer(x))
                    prod.insert(g.mul(y, v));
            CHECK(prod == nset);
        }
    }
}

TEST_CASE("cuspidal structure examples")
{
    auto a2 = CoxeterGroup::build("A2");
    Arrangement arr(a2);
    auto cs = arr.cuspidal_structure(2);
    CHECK(cs.classes.size() == 1);
    CHECK(cs.cuspidal_classes.size() == 1);
    CHECK(cs.cuspidal_classes[0].size() == 2);
    CHECK(arr.cuspidal_structure(0).classes == std::vector<int>{0});

    auto b2 = CoxeterGroup::build("B2");
    Arrangement ab(b2);
    auto top = ab.cuspidal_structure(3);
    CHECK(top.cuspidal_classes.size() == 2);
    CHECK(top.classes.size() == 2);
}

TEST_CASE("alpha characters")
{
    for (const char* name : {"A2", "B2", "A3", "B3", "H3"}) {
        CAPTURE(name);
        auto g = CoxeterGroup::build(name);
        Arrangement arr(g);
        for (int x = 0; x < arr.num_lattice(); ++x) {
            for (int w : arr.pointwise_stabilizer(x))
                CHECK(arr.alpha(x, w) == CycloNumber(1));
            auto n = arr.setwise_stabilizer(x);
            for (int a : n) {
                auto va = arr.alpha(x, a);
                CHECK((va * va).is_one());
                for (int b : n)
                    if ((a * 31 + b) % 5 == 0)
                        CHECK(arr.alpha(x, g.mul(a, b)) == va * arr.alpha(x, b));
            }
        }
        for (int w = 0; w < g.size(); ++w)
            if (arr.is_cuspidal(w))
                for (int z : g.centralizer(w))
                    CHECK(arr.alpha_c(w, z) == CycloNumber(1));
    }
    auto a2 = CoxeterGroup::build("A2");
    Arrangement arr(a2);
    int x = arr.fix_of(a2.generator(0));
    auto n = arr.setwise_stabilizer(x);
    CHECK(n.size() == 2);
    CHECK_THROWS_AS(arr.alpha(x, a2.generator(1)), std::invalid_argument);
}
