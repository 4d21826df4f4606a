#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxwitness/arrangement.hpp"
#include "coxwitness/characters.hpp"
#include "coxwitness/group_algebra.hpp"

namespace coxwitness {

/// Set of hyperplane positions (bit p = the p-th hyperplane in the chosen linear order).
using PositionSet = std::uint64_t;

/// Σ c·a_S over NBC monomials S (ascending positions), keyed by position set.
struct OSElement {
    std::map<PositionSet, CycloNumber> terms;

    bool is_zero() const { return terms.empty(); }
    void add(PositionSet m, const CycloNumber& c);
    OSElement& operator+=(const OSElement& b);
    OSElement& operator-=(const OSElement& b);
    friend OSElement operator+(OSElement a, const OSElement& b) { return a += b; }
    friend OSElement operator-(OSElement a, const OSElement& b) { return a -= b; }
    friend OSElement operator*(const CycloNumber& c, const OSElement& a);
    friend bool operator==(const OSElement& a, const OSElement& b) { return a.terms == b.terms; }
};

/// The Orlik–Solomon algebra of the reflection arrangement on its no-broken-circuit basis.
class OrlikSolomon {
public:
    /// `order[p]` is the reflection (positive-root index) placed at position p;
    /// empty means root-index order.
    explicit OrlikSolomon(const Arrangement& arr, std::vector<int> order = {});

    const Arrangement& arrangement() const { return *arr_; }
    const CoxeterGroup& group() const { return arr_->group(); }
    int num_hyperplanes() const { return n_; }
    int reflection_at(int position) const { return order_[position]; }
    int position_of(int reflection) const { return position_[reflection]; }

    /// NBC basis, ordered by (degree, position set).
    const std::vector<PositionSet>& basis() const { return basis_; }
    /// Index of an NBC set in basis(), or -1.
    int basis_index(PositionSet m) const;
    /// dim A^p for p = 0..rank.
    std::vector<int> degree_dims() const;
    /// Lattice index of the intersection of the hyperplanes in m.
    int flat_of(PositionSet m) const;
    bool is_independent(PositionSet m) const;
    bool is_nbc(PositionSet m) const;

    /// a_{t_1}⋯a_{t_p} for reflections given by positive-root index, in the given order.
    OSElement monomial(const std::vector<int>& reflections) const;
    /// Same, with hyperplanes given by position.
    OSElement straighten(const std::vector<int>& positions) const;
    OSElement product(const OSElement& a, const OSElement& b) const;
    /// w·x, with w·a_t = a_{wtw⁻¹}.
    OSElement act(int w, const OSElement& x) const;
    /// Σ_w c_w (w·x).
    OSElement act(const GroupAlgebraElement& c, const OSElement& x) const;

    /// Basis indices of A_X.
    const std::vector<int>& flat_basis(int lattice_index) const { return flat_basis_[lattice_index]; }
    /// Basis indices of A_λ = ⊕_{X ∈ λ} A_X.
    std::vector<int> shape_basis(int shape_id) const;
    /// Trace of w on the span of the given basis vectors (which must be w-stable).
    CycloNumber trace(int w, const std::vector<int>& basis_indices) const;
    /// Character of A_λ.
    ClassFunction shape_character(int shape_id) const;
    /// Character of A^p.
    ClassFunction degree_character(int p) const;
    /// Character of A.
    ClassFunction total_character() const;

    std::string to_string(const OSElement& x) const;

private:
    /// Expansion of a_S (S ascending, independent) as (basis index, coefficient).
    const std::vector<std::pair<int, Rational>>& expansion(PositionSet m) const;
    void build_expansions();
    std::vector<std::pair<int, Rational>> compute_expansion(PositionSet m);
    int join(int lattice_index, int position) const { return join_[static_cast<std::size_t>(lattice_index) * n_ + position]; }
    /// Sorts positions, returning the set and the sign of the sorting permutation (0 on repeats).
    static std::pair<PositionSet, int> sort_with_sign(std::vector<int> positions);
    void add_expansion(OSElement& out, PositionSet m, int sign, const CycloNumber& c) const;

    const Arrangement* arr_;
    int n_ = 0;
    std::vector<int> order_;
    std::vector<int> position_;
    std::vector<int> join_;
    std::vector<PositionSet> flat_positions_;  // by lattice index
    std::vector<PositionSet> basis_;
    std::unordered_map<PositionSet, int> basis_index_;
    std::unordered_map<PositionSet, std::vector<std::pair<int, Rational>>> expansions_;
    std::vector<std::vector<int>> flat_basis_;
};

}  // namespace coxwitness
