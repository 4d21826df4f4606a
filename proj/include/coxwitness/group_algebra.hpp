#pragma once

#include <vector>

#include "coxwitness/coxeter.hpp"
#include "coxwitness/cyclotomic.hpp"

namespace coxwitness {

/// Element of the group algebra ℚ(ζ)W, stored densely by element index.
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(const CoxeterGroup& g) : group_(&g), coeffs_(static_cast<std::size_t>(g.size())) {}

    static GroupAlgebraElement zero(const CoxeterGroup& g) { return GroupAlgebraElement(g); }
    static GroupAlgebraElement basis(const CoxeterGroup& g, int w, CycloNumber c = CycloNumber(1));
    static GroupAlgebraElement one(const CoxeterGroup& g) { return basis(g, 0); }
    /// Σ_{w ∈ elems} w.
    static GroupAlgebraElement sum_of(const CoxeterGroup& g, const std::vector<int>& elems);

    const CoxeterGroup& group() const { return *group_; }
    const CycloNumber& operator[](int w) const { return coeffs_[w]; }
    CycloNumber& operator[](int w) { return coeffs_[w]; }
    bool is_zero() const;
    int support_size() const;
    /// Smallest cyclotomic order containing every coefficient.
    int field_order() const;

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& b);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& b);
    GroupAlgebraElement& operator*=(const CycloNumber& c);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const CycloNumber& c) { return a *= c; }
    friend GroupAlgebraElement operator*(const CycloNumber& c, GroupAlgebraElement a) { return a *= c; }
    /// Convolution product.
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

    /// a·w and w·a for a group element w.
    GroupAlgebraElement times_element(int w) const;
    GroupAlgebraElement element_times(int w) const;
    /// n⁻¹·a·n.
    GroupAlgebraElement conjugated_by(int n) const;

    std::string to_string() const;

private:
    void check_same(const GroupAlgebraElement& b) const;

    const CoxeterGroup* group_ = nullptr;
    std::vector<CycloNumber> coeffs_;
};

/// Rank of {a·g : g ∈ gens} (or of the given vectors) computed in F_p for a
/// large prime p; a lower bound for the exact rank, equal to it for all but
/// finitely many p.
std::size_t modular_rank_of(const std::vector<GroupAlgebraElement>& vectors, int prime_index = 0);

}  // namespace coxwitness
