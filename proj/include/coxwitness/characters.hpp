#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coxwitness/coxeter.hpp"
#include "coxwitness/group_algebra.hpp"

namespace coxwitness {

/// A class function on W, stored by conjugacy-class index.
class ClassFunction {
public:
    ClassFunction() = default;
    explicit ClassFunction(const CoxeterGroup& g)
        : group_(&g), values_(static_cast<std::size_t>(g.num_classes()))
    {
    }
    /// Evaluates f on each class representative.
    static ClassFunction from(const CoxeterGroup& g, const std::function<CycloNumber(int)>& f);
    static ClassFunction trivial(const CoxeterGroup& g);
    static ClassFunction sign(const CoxeterGroup& g);
    static ClassFunction regular(const CoxeterGroup& g);

    const CoxeterGroup& group() const { return *group_; }
    const std::vector<CycloNumber>& values() const { return values_; }
    const CycloNumber& at_class(int c) const { return values_[c]; }
    CycloNumber& at_class(int c) { return values_[c]; }
    /// Value at the element w.
    const CycloNumber& operator()(int w) const { return values_[group_->class_of(w)]; }
    CycloNumber degree() const { return (*this)(0); }

    ClassFunction& operator+=(const ClassFunction& b);
    ClassFunction& operator-=(const ClassFunction& b);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    /// Pointwise product (character of the tensor product).
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator*(const CycloNumber& c, ClassFunction a);
    friend bool operator==(const ClassFunction& a, const ClassFunction& b);
    bool is_zero() const;

    /// ⟨f, g⟩ = |W|⁻¹ Σ_w f(w)·conj(g(w)).
    CycloNumber inner(const ClassFunction& other) const;
    std::string to_string() const;

private:
    void check_same(const ClassFunction& b) const;

    const CoxeterGroup* group_ = nullptr;
    std::vector<CycloNumber> values_;
};

/// A homomorphism from a subgroup H ≤ W to ℂ^*, with values ζ_order^exponent.
struct LinearCharacter {
    std::vector<int> subgroup;   // sorted element indices
    int order = 1;               // values lie in the order-th roots of unity
    std::vector<int> exponents;  // aligned with subgroup
    /// Generators of H modulo [H, H]; the character is determined by its values there.
    std::vector<int> generators;

    CycloNumber operator()(int w) const;
    int exponent_of(int w) const;
    bool is_trivial() const;
    /// Pointwise product with another character of the same subgroup.
    LinearCharacter operator*(const LinearCharacter& other) const;
    /// Values on the generating set used by linear_characters, as exponent/order strings.
    std::string describe(const CoxeterGroup& g) const;
};

/// Closure of a set of elements under multiplication (the generated subgroup), sorted.
std::vector<int> generate_subgroup(const CoxeterGroup& g, const std::vector<int>& gens);
/// [H, H].
std::vector<int> derived_subgroup(const CoxeterGroup& g, const std::vector<int>& h);
/// Every linear character of H, trivial first, in a deterministic order.
std::vector<LinearCharacter> linear_characters(const CoxeterGroup& g, const std::vector<int>& h);
/// Linear character of H built from values f(h) (must be roots of unity of order dividing `order`).
LinearCharacter make_linear_character(const CoxeterGroup& g, const std::vector<int>& h, int order,
                                      const std::function<int(int)>& exponent);
/// True iff φ(ab) = φ(a)φ(b) on H.
bool is_homomorphism(const CoxeterGroup& g, const LinearCharacter& phi);

/// Ind_H^W of a function on H.
ClassFunction induce(const CoxeterGroup& g, const std::vector<int>& h, const std::function<CycloNumber(int)>& f);
ClassFunction induce(const CoxeterGroup& g, const LinearCharacter& phi);
/// Ind_H^K f evaluated at x, for H ≤ K ≤ W given as element lists and x ∈ K.
CycloNumber induced_value(const CoxeterGroup& g, const std::vector<int>& k, const std::vector<int>& h,
                          const std::function<CycloNumber(int)>& f, int x);
/// ⟨f, g⟩_H = |H|⁻¹ Σ_{h ∈ H} f(h)·conj(g(h)).
CycloNumber subgroup_inner(const std::vector<int>& h, const std::function<CycloNumber(int)>& f,
                           const std::function<CycloNumber(int)>& g);

/// Character of W on the right ideal e·ℚW (e must be idempotent; throws std::invalid_argument otherwise).
ClassFunction ideal_character(const GroupAlgebraElement& e, bool check_idempotent = true);

/// Trace of x ↦ n⁻¹·e·x·w·n on ℚW_L, for an idempotent e ∈ ℚW_L invariant under
/// conjugation by n, w ∈ W_L and n ∈ N_L: the character of the N_W(W_L)-module
/// e·ℚW_L at the element w·n.
CycloNumber twisted_parabolic_trace(const GroupAlgebraElement& e, const std::vector<int>& parabolic, int w, int n);

}  // namespace coxwitness
