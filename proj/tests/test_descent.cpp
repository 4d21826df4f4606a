#include <doctest.h>

#include "coxwitness/arrangement.hpp"
#include "coxwitness/descent.hpp"

using namespace coxwitness;

namespace {

GroupAlgebraElement ga(const DescentAlgebra& da, const DescentElement& a)
{
    return da.to_group_algebra(a);
}

}  // namespace

TEST_CASE("x basis")
{
    auto a1 = CoxeterGroup::build("A1");
    DescentAlgebra d1(a1);
    auto x0 = d1.x_group(0);
    CHECK(x0[0] == CycloNumber(1));
    CHECK(x0[1] == CycloNumber(1));
    CHECK(d1.x_group(1) == GroupAlgebraElement::one(a1));
    auto sq = d1.product(d1.x(0), d1.x(0));
    CHECK(sq == CycloNumber(2) * d1.x(0));

    auto a2 = CoxeterGroup::build("A2");
    DescentAlgebra d2(a2);
    CHECK(d2.x_group(0).support_size() == 6);
    CHECK(d2.coset_reps(0b01).size() == 3);
    for (Subset j : d2.subsets())
        CHECK(d2.product(d2.x(0b11), d2.x(j)) == d2.x(j));
}

TEST_CASE("structure constants match convolution")
{
    for (const char* name : {"A2", "B2", "A3", "B3", "H3", "A2xA1", "I2(5)"}) {
        CAPTURE(name);
        auto g = CoxeterGroup::build(name);
        DescentAlgebra da(g);
        for (Subset i : da.subsets()) {
            int total = 0;
            for (Subset j : da.subsets()) {
                auto lhs = ga(da, da.product(da.x(i), da.x(j)));
                CHECK(lhs == da.x_group(i) * da.x_group(j));
            }
            for (Subset k : da.subsets())
                total += da.structure_constant(i, i, k);
            // Σ_K |W^{IIK}| = |W^{II}|
            int doubles = 0;
            for (int w = 0; w < g.size(); ++w)
                doubles += (g.left_descents(w) & i) == 0 && (g.right_descents(w) & i) == 0;
            CHECK(total == doubles);
        }
    }
}

TEST_CASE("m matrix")
{
    auto a1 = CoxeterGroup::build("A1");
    DescentAlgebra d1(a1);
    Sigma one;
    CHECK(d1.m(one, 0, 0) == Rational(2));
    CHECK(d1.m(one, 0, 1) == Rational(1));
    CHECK(d1.m(one, 1, 1) == Rational(1));
    CHECK(d1.m(one, 1, 0) == Rational(0));

    auto b3 = CoxeterGroup::build("B3");
    DescentAlgebra d3(b3);
    Sigma s;
    s.default_value = Rational(3, 2);
    s.overrides[0b010] = Rational(5);
    for (Subset j : d3.subsets()) {
        CHECK(d3.m(s, j, 0b111) == s(j));
        CHECK(d3.m(s, j, j).sign() > 0);
        for (Subset k : d3.subsets())
            if (popcount(j) > popcount(k))
                CHECK(d3.m(s, j, k).is_zero());
    }
}

TEST_CASE("A1 idempotents")
{
    auto a1 = CoxeterGroup::build("A1");
    DescentAlgebra d1(a1);
    auto sol = d1.solve(Sigma{});
    CHECK(sol.n[0][0] == Rational(1, 2));
    CHECK(sol.n[1][0] == Rational(-1, 2));
    CHECK(sol.n[1][1] == Rational(1));
    auto e0 = ga(d1, sol.e[0]);
    auto e1 = ga(d1, sol.e[1]);
    CHECK(e0[0] == CycloNumber(Rational(1, 2)));
    CHECK(e0[1] == CycloNumber(Rational(1, 2)));
    CHECK(e1[0] == CycloNumber(Rational(1, 2)));
    CHECK(e1[1] == CycloNumber(Rational(-1, 2)));
}

TEST_CASE("quasi-idempotents and shape idempotents")
{
    std::vector<Sigma> sigmas(3);
    sigmas[1].default_value = Rational(2, 3);
    sigmas[1].overrides[0b01] = Rational(7);
    sigmas[2].overrides[0b10] = Rational(1, 5);
    sigmas[2].overrides[0b11] = Rational(4);
    for (const char* name : {"A2", "B2", "A3", "I2(5)"}) {
        CAPTURE(name);
        auto g = CoxeterGroup::build(name);
        DescentAlgebra da(g);
        for (const auto& sigma : sigmas) {
            auto sol = da.solve(sigma);
            auto total = da.zero();
            const auto& classes = da.shape_classes();
            for (std::size_t l = 0; l < classes.size(); ++l) {
                int lam = static_cast<int>(l);
                auto el = da.e_lambda(sol, lam);
                total += el;
                CycloNumber inv_sigma(da.sigma_of_class(sigma, lam).inverse());
                for (Subset i : classes[l]) {
                    CHECK(da.product(el, sol.e[i]) == sol.e[i]);
                    CHECK(da.product(sol.e[i], el) == inv_sigma * el);
                    for (Subset j : classes[l])
                        CHECK(da.product(sol.e[i], sol.e[j]) == inv_sigma * sol.e[j]);
                }
                for (std::size_t m = 0; m < classes.size(); ++m) {
                    auto em = da.e_lambda(sol, static_cast<int>(m));
                    CHECK(da.product(el, em) == (l == m ? el : da.zero()));
                }
            }
            CHECK(total == da.x(g.all_generators()));
        }
    }
}

TEST_CASE("dimension of shape ideals")
{
    for (const char* name : {"A2", "B2", "A3", "B3"}) {
        CAPTURE(name);
        auto g = CoxeterGroup::build(name);
        DescentAlgebra da(g);
        Arrangement arr(g);
        auto sol = da.solve(Sigma{});
        for (std::size_t l = 0; l < da.shape_classes().size(); ++l) {
            auto e = ga(da, da.e_lambda(sol, static_cast<int>(l)));
            std::vector<GroupAlgebraElement> rows;
            for (int w = 0; w < g.size(); ++w)
                rows.push_back(e.times_element(w));
            CHECK(modular_rank_of(rows) == static_cast<std::size_t>(arr.shape(static_cast<int>(l)).preimage_size));
        }
    }
}

TEST_CASE("restriction of sigma")
{
    auto a3 = CoxeterGroup::build("A3");
    DescentAlgebra da(a3);
    Sigma sigma;
    sigma.overrides[0b001] = Rational(3);
    sigma.overrides[0b110] = Rational(2, 7);
    auto full = da.solve(sigma);
    CHECK(da.restrict_sigma(0b111, sigma).overrides.at(0b010) == sigma(0b010));
    for (Subset l : da.subsets()) {
        DescentAlgebra sub(a3, l);
        auto sl = da.restrict_sigma(l, sigma);
        for (Subset i : sub.subsets())
            for (Subset j : sub.subsets())
                CHECK(sub.m(sl, i, j) == da.m(sigma, i, j));
        auto sol = sub.solve(sl);
        auto xl = da.x_group(l);
        for (Subset j : sub.subsets())
            CHECK(xl * sub.to_group_algebra(sol.e[j]) == da.to_group_algebra(full.e[j]));
    }
    CHECK_THROWS_AS(DescentAlgebra(a3, 0b1000), std::invalid_argument);
}

TEST_CASE("sigma json")
{
    auto s = Sigma::from_json_text(R"({"default": "1", "overrides": {"0b011": "3/2", "4": 2}})");
    CHECK(s(0b011) == Rational(3, 2));
    CHECK(s(4) == Rational(2));
    CHECK(s(1) == Rational(1));
    CHECK_THROWS(Sigma::from_json_text(R"({"default": "-1"})"));
    CHECK_THROWS(Sigma::from_json_text(R"({"default": "0"})"));
}
