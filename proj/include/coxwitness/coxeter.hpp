#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coxwitness/cyclotomic.hpp"
#include "coxwitness/linalg.hpp"

namespace coxwitness {

/// Bitmask over the simple generators; bit i is s_{i+1} in Bourbaki labels.
using Subset = std::uint32_t;

inline int popcount(Subset s) { return __builtin_popcount(s); }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

/// "{1,3}"-style rendering with 1-based generator labels.
std::string subset_label(Subset s);

/// Finite Coxeter diagram; generators are numbered 0..rank-1 in Bourbaki order
/// within each irreducible component, components in input order.
struct CoxeterDiagram {
    int rank = 0;
    std::vector<std::vector<int>> m;  // Coxeter matrix
    std::string label;
    /// Irreducible components: type label and generator indices.
    std::vector<std::string> component_labels;
    std::vector<std::vector<int>> components;

    /// Parses "A3", "B4", "D4", "I2(7)", "H3" and x-joined products such as "A2xA1".
    static CoxeterDiagram parse(const std::string& text);
    /// Classifies an arbitrary Coxeter matrix; rejects components outside the supported list.
    static CoxeterDiagram from_matrix(const std::vector<std::vector<int>>& m);
    /// Diagram of the standard parabolic subgroup on the generators in `sub` (renumbered).
    CoxeterDiagram restrict_to(Subset sub) const;
};

class CoxeterGroup;

/// Handle to a group element; arithmetic between elements of different
/// groups throws std::invalid_argument.
struct Element {
    int index = 0;
    const CoxeterGroup* group = nullptr;

    Element operator*(const Element& other) const;
    Element inverse() const;
    int length() const;
    Subset right_descents() const;
    Subset left_descents() const;
    std::vector<int> reduced_word() const;
    friend bool operator==(const Element& a, const Element& b) { return a.group == b.group && a.index == b.index; }
};

/// A finite Coxeter group with all elements enumerated.
///
/// Elements are indexed 0..size()-1 in (length, lex-least reduced word)
/// order, so index 0 is the identity and smaller indices are canonical
/// representatives. Each element is stored as the permutation it induces on
/// the 2N roots: roots [0, N) are positive (the first rank() of them simple),
/// root i + N is the negative of root i.
class CoxeterGroup {
public:
    explicit CoxeterGroup(CoxeterDiagram diagram);
    static CoxeterGroup build(const std::string& text) { return CoxeterGroup(CoxeterDiagram::parse(text)); }

    CoxeterGroup(const CoxeterGroup&) = delete;
    CoxeterGroup& operator=(const CoxeterGroup&) = delete;
    CoxeterGroup(CoxeterGroup&&) = default;

    const CoxeterDiagram& diagram() const { return diagram_; }
    const std::string& label() const { return diagram_.label; }
    int rank() const { return rank_; }
    Subset all_generators() const { return (Subset{1} << rank_) - 1; }
    int size() const { return size_; }
    int num_positive_roots() const { return npos_; }
    /// Order n of the cyclotomic field ℚ(ζ_n) holding the root coordinates.
    int field_order() const { return field_order_; }

    Element element(int index) const { return Element{index, this}; }
    int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * size_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int length(int a) const { return length_[a]; }
    const std::vector<int>& word(int a) const { return words_[a]; }
    Subset right_descents(int a) const { return rdesc_[a]; }
    Subset left_descents(int a) const { return ldesc_[a]; }
    int generator(int s) const { return gen_[s]; }
    int from_word(std::span<const int> word) const;
    int longest() const { return longest_; }
    int conjugate(int g, int w) const { return mul(mul(g, w), inv(g)); }  // g w g⁻¹
    int element_order(int w) const;
    /// Image of root i under w.
    int act_on_root(int w, int root) const { return perms_[static_cast<std::size_t>(w) * 2 * npos_ + root]; }
    /// "s1s2s1"-style rendering with 1-based labels; "1" for the identity.
    std::string word_string(int w) const;
    /// Same as word(w) with 1-based labels.
    std::vector<int> word_labels(int w) const;

    const std::vector<CycloNumber>& root(int i) const { return roots_[i]; }
    const Matrix<CycloNumber>& gram() const { return gram_; }
    /// Simple generators occurring in root i.
    Subset root_support(int i) const { return root_support_[i % npos_]; }
    /// BFS depth of positive root i (simple roots have depth 0).
    int root_depth(int i) const { return root_depth_[i]; }
    /// Element index of the reflection along positive root i.
    int reflection(int i) const { return reflections_[i]; }
    /// Positive root index of reflection w, or -1 if w is not a reflection.
    int reflection_root(int w) const { return reflection_root_[w]; }

    int num_classes() const { return static_cast<int>(classes_.size()); }
    int class_of(int w) const { return class_of_[w]; }
    /// Members of class c in index order; members[0] is the representative.
    const std::vector<int>& class_members(int c) const { return classes_[c]; }
    int class_rep(int c) const { return classes_[c].front(); }
    std::vector<int> centralizer(int w) const;

    /// W^I: elements with no right descent in I.
    std::vector<int> coset_reps(Subset i) const;
    /// W^{IJ} = (W^I)⁻¹ ∩ W^J.
    std::vector<int> double_coset_reps(Subset i, Subset j) const;
    /// {w ∈ W^{IJ} : w⁻¹(Δ_I) ∩ Δ_J = Δ_K}.
    std::vector<int> refined_double_coset_reps(Subset i, Subset j, Subset k) const;
    /// The K with w⁻¹(Δ_I) ∩ Δ_J = Δ_K.
    Subset meet_subset(int w, Subset i, Subset j) const;
    /// {I' ⊆ S : w(Δ_I) = Δ_{I'}} if w maps Δ_I into Δ, otherwise -1 (as all bits set).
    std::int64_t image_of_simple_subset(int w, Subset i) const;

    std::vector<int> parabolic(Subset i) const;
    bool in_parabolic(int w, Subset i) const { return is_subset(support(w), i); }
    Subset support(int w) const { return support_[w]; }
    int longest_in(Subset i) const;
    /// N_W(W_I).
    std::vector<int> normalizer(Subset i) const;
    /// N_I = {w : w(Δ_I) = Δ_I}.
    std::vector<int> parabolic_complement(Subset i) const;

    /// Matrix of w on V = span Δ in the basis Δ (column j = w(α_j)).
    Matrix<CycloNumber> matrix(int w) const;
    /// Basis of Fix(w) in simple-root coordinates.
    std::vector<std::vector<CycloNumber>> fix_basis(int w) const;
    /// det of w restricted to span(basis); throws std::invalid_argument if w does not stabilize it.
    CycloNumber det_on_subspace(int w, const std::vector<std::vector<CycloNumber>>& basis) const;
    /// Bilinear form ⟨u, v⟩ = uᵀ B v.
    CycloNumber form(const std::vector<CycloNumber>& u, const std::vector<CycloNumber>& v) const;

private:
    void build_roots();
    void build_elements();
    void build_classes();

    CoxeterDiagram diagram_;
    int rank_ = 0;
    int npos_ = 0;
    int size_ = 0;
    int field_order_ = 1;
    int longest_ = 0;
    Matrix<CycloNumber> gram_;
    std::vector<std::vector<CycloNumber>> roots_;
    std::vector<Subset> root_support_;
    std::vector<int> root_depth_;
    std::vector<std::vector<int>> simple_perm_;

    std::vector<std::uint16_t> perms_;  // size_ × 2N
    std::vector<std::uint16_t> mult_;   // size_ × size_
    std::vector<int> inv_;
    std::vector<int> length_;
    std::vector<std::vector<int>> words_;
    std::vector<Subset> rdesc_;
    std::vector<Subset> ldesc_;
    std::vector<Subset> support_;
    std::vector<int> gen_;
    std::vector<int> reflections_;
    std::vector<int> reflection_root_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> classes_;
};

}  // namespace coxwitness
