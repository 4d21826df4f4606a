#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxwitness/coxeter.hpp"
#include "coxwitness/group_algebra.hpp"
#include "coxwitness/rational.hpp"

namespace coxwitness {

/// Positive rational weight function on subsets; unlisted subsets take the default.
struct Sigma {
    Rational default_value = Rational(1);
    std::map<Subset, Rational> overrides;

    Rational operator()(Subset i) const;
    bool is_constant_one() const;
    /// Throws std::invalid_argument if any value is not positive.
    void validate() const;
    /// Parses {"default": "1", "overrides": {"0b011": "3/2", "5": "2"}}.
    static Sigma from_json_text(const std::string& text);
};

/// Element Σ coords[I]·x_I of a descent algebra; indexed by subset bitmask.
struct DescentElement {
    std::vector<CycloNumber> coords;
    friend bool operator==(const DescentElement& a, const DescentElement& b) { return a.coords == b.coords; }
    DescentElement& operator+=(const DescentElement& b);
    DescentElement& operator-=(const DescentElement& b);
    DescentElement& operator*=(const CycloNumber& c);
    friend DescentElement operator+(DescentElement a, const DescentElement& b) { return a += b; }
    friend DescentElement operator-(DescentElement a, const DescentElement& b) { return a -= b; }
    friend DescentElement operator*(const CycloNumber& c, DescentElement a) { return a *= c; }
    bool is_zero() const;
};

/// Quasi-idempotents e_K^σ = Σ_J n_{JK} x_J for every K ⊆ L.
struct BbhtSolution {
    Sigma sigma;
    /// n[K][J] = n^σ_{JK}, indexed by bitmask.
    std::vector<std::vector<Rational>> n;
    std::vector<DescentElement> e;  // by K
};

/// Solomon's descent algebra Σ(W_L) of the standard parabolic W_L ⊆ W.
/// Subsets are global bitmasks contained in L; group algebra images live in ℚW.
class DescentAlgebra {
public:
    DescentAlgebra(const CoxeterGroup& g, Subset parabolic);
    explicit DescentAlgebra(const CoxeterGroup& g) : DescentAlgebra(g, g.all_generators()) {}

    const CoxeterGroup& group() const { return *group_; }
    Subset parabolic() const { return parabolic_; }
    /// Subsets of L ordered by (cardinality, bitmask).
    const std::vector<Subset>& subsets() const { return subsets_; }
    /// Elements of W_L.
    const std::vector<int>& elements() const { return elements_; }
    /// Classes of subsets of L under W_L-conjugacy of Δ_I (the sets S_λ of W_L),
    /// ordered by (cardinality, lex-least member).
    const std::vector<std::vector<Subset>>& shape_classes() const { return shape_classes_; }
    int shape_class_of(Subset i) const { return shape_class_of_[i]; }

    /// |W_L^{IJK}|.
    int structure_constant(Subset i, Subset j, Subset k) const;
    DescentElement zero() const;
    DescentElement x(Subset i) const;
    /// The set W_L^I.
    const std::vector<int>& coset_reps(Subset i) const { return coset_reps_[i]; }
    GroupAlgebraElement x_group(Subset i) const;
    GroupAlgebraElement to_group_algebra(const DescentElement& a) const;
    DescentElement product(const DescentElement& a, const DescentElement& b) const;

    /// m^σ_{JK}.
    Rational m(const Sigma& sigma, Subset j, Subset k) const;
    BbhtSolution solve(const Sigma& sigma) const;
    /// e_λ^σ for the shape class with the given index.
    DescentElement e_lambda(const BbhtSolution& sol, int shape_class) const;
    Rational sigma_of_class(const Sigma& sigma, int shape_class) const;
    /// σ_K(I) = m^σ_{IK} for I ⊆ K.
    Sigma restrict_sigma(Subset k, const Sigma& sigma) const;
    /// x_K·a for a ∈ Σ(W_K), via x_K x^K_I = x_I; returns an element of this algebra.
    DescentElement parabolic_embed(Subset k, const DescentElement& a) const;

    std::string to_string(const DescentElement& a) const;

private:
    const CoxeterGroup* group_;
    Subset parabolic_;
    std::vector<Subset> subsets_;
    std::vector<int> elements_;
    std::vector<std::vector<Subset>> shape_classes_;
    std::vector<int> shape_class_of_;
    /// (K, |W_L^{IJK}|) pairs for each (I, J), at i * stride_ + j.
    std::vector<std::vector<std::pair<Subset, int>>> sparse_;
    std::vector<std::vector<int>> coset_reps_;
    std::size_t stride_ = 0;
};

}  // namespace coxwitness
