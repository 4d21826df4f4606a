#include <doctest.h>

#include "coxwitness/characters.hpp"
#include "coxwitness/descent.hpp"

using namespace coxwitness;

namespace {

int class_of_order(const CoxeterGroup& g, int order)
{
    for (int c = 0; c < g.num_classes(); ++c)
        if (g.element_order(g.class_rep(c)) == order)
            return c;
    return -1;
}

}  // namespace

TEST_CASE("ideal characters")
{
    auto a1 = CoxeterGroup::build("A1");
    CHECK(ideal_character(GroupAlgebraElement::one(a1)) == ClassFunction::regular(a1));
    auto e = GroupAlgebraElement::one(a1);
    e -= GroupAlgebraElement::basis(a1, 1);
    e *= CycloNumber(Rational(1, 2));
    CHECK(ideal_character(e) == ClassFunction::sign(a1));
    CHECK_THROWS_AS(ideal_character(GroupAlgebraElement::basis(a1, 1)), std::invalid_argument);

    auto a2 = CoxeterGroup::build("A2");
    DescentAlgebra da(a2);
    auto sol = da.solve(Sigma{});
    auto chi = ideal_character(da.to_group_algebra(da.e_lambda(sol, 2)));
    CHECK(chi.degree() == CycloNumber(2));
    CHECK(chi.at_class(class_of_order(a2, 2)) == CycloNumber(0));
    CHECK(chi.at_class(class_of_order(a2, 3)) == CycloNumber(-1));
    CHECK(chi.inner(chi) == CycloNumber(1));
}

TEST_CASE("linear characters")
{
    auto a3 = CoxeterGroup::build("A3");
    std::vector<int> all(a3.size());
    for (int w = 0; w < a3.size(); ++w)
        all[w] = w;
    CHECK(linear_characters(a3, all).size() == 2);
    auto a2 = CoxeterGroup::build("A2");
    std::vector<int> s3(6);
    for (int w = 0; w < 6; ++w)
        s3[w] = w;
    auto chars = linear_characters(a2, s3);
    REQUIRE(chars.size() == 2);
    CHECK(chars[0].is_trivial());

    auto i8 = CoxeterGroup::build("I2(8)");
    int rot = i8.mul(i8.generator(0), i8.generator(1));
    auto cyc = generate_subgroup(i8, {rot});
    CHECK(cyc.size() == 8);
    CHECK(linear_characters(i8, cyc).size() == 8);

    for (const char* name : {"B3", "H3", "A4", "D4"}) {
        CAPTURE(name);
        auto g = CoxeterGroup::build(name);
        for (int c = 0; c < g.num_classes(); ++c) {
            auto z = g.centralizer(g.class_rep(c));
            auto d = derived_subgroup(g, z);
            auto lc = linear_characters(g, z);
            CHECK(lc.size() * d.size() == z.size());
            for (const auto& phi : lc)
                CHECK(is_homomorphism(g, phi));
        }
    }
}

TEST_CASE("induction")
{
    auto a2 = CoxeterGroup::build("A2");
    int c = a2.mul(a2.generator(0), a2.generator(1));
    auto h = generate_subgroup(a2, {c});
    auto chars = linear_characters(a2, h);
    REQUIRE(chars.size() == 3);
    for (const auto& phi : chars) {
        if (!(phi(a2.inv(c)) == CycloNumber::root_of_unity(3, 1)))
            continue;
        auto ind = induce(a2, phi);
        CHECK(ind.degree() == CycloNumber(2));
        CHECK(ind.at_class(class_of_order(a2, 2)) == CycloNumber(0));
        CHECK(ind.at_class(class_of_order(a2, 3)) == CycloNumber(-1));
    }
    CHECK(induce(a2, {0}, [](int) { return CycloNumber(1); }) == ClassFunction::regular(a2));
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    auto sign = ClassFunction::sign(a2);
    CHECK(induce(a2, all, [&](int w) { return sign(w); }) == sign);
    CHECK(sign * sign == ClassFunction::trivial(a2));
    CHECK(ClassFunction::regular(a2).inner(ClassFunction::trivial(a2)) == CycloNumber(1));
}

TEST_CASE("Frobenius reciprocity")
{
    for (const char* name : {"B3", "H3", "I2(7)"}) {
        CAPTURE(name);
        auto g = CoxeterGroup::build(name);
        auto sign = ClassFunction::sign(g);
        for (int c = 0; c < g.num_classes(); ++c) {
            auto z = g.centralizer(g.class_rep(c));
            for (const auto& phi : linear_characters(g, z)) {
                auto ind = induce(g, phi);
                auto lhs = ind.inner(sign);
                auto rhs = subgroup_inner(z, phi, [&](int w) { return sign(w); });
                CHECK(lhs == rhs);
            }
        }
    }
}
