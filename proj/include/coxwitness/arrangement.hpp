#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "coxwitness/coxeter.hpp"

namespace coxwitness {

/// Bitmask over positive roots, i.e. over the reflections of W.
using ReflectionSet = std::uint64_t;

/// A subspace X in the intersection lattice, identified by the closed set
/// of reflections whose hyperplanes contain it.
struct LatticeElement {
    ReflectionSet reflections = 0;
    int codim = 0;
    int shape = -1;
    /// Basis of X in simple-root coordinates.
    std::vector<std::vector<CycloNumber>> basis;
};

/// A W-orbit of lattice elements.
struct Shape {
    int id = 0;
    int codim = 0;
    std::vector<int> members;      // lattice indices
    std::vector<Subset> s_lambda;  // {I : X_I in the orbit}, increasing bitmask
    Subset canonical = 0;          // lex-least member of s_lambda
    std::vector<int> classes;      // W-classes of this shape
    int preimage_size = 0;         // |sh⁻¹(λ)|
};

struct CuspidalStructure {
    int shape = 0;
    Subset parabolic = 0;  // the canonical I with X_I in the shape
    std::vector<int> classes;
    /// Cuspidal W_I-classes, as sorted element lists.
    std::vector<std::vector<int>> cuspidal_classes;
    /// For each cuspidal W_I-class, the W-class containing it.
    std::vector<int> ambient_class;
    /// C ↦ C ∩ W_I is a bijection onto the cuspidal W_I-classes.
    bool bijection = false;
    /// |C| = |W : N_W(W_I)|·|C ∩ W_I| for every class C of the shape.
    bool counting = false;
    int normalizer_order = 0;
};

class Arrangement {
public:
    explicit Arrangement(const CoxeterGroup& group);

    const CoxeterGroup& group() const { return *group_; }
    int num_lattice() const { return static_cast<int>(lattice_.size()); }
    const LatticeElement& lattice(int i) const { return lattice_[i]; }
    /// Index of the lattice element with the given reflection set, or -1.
    int find(ReflectionSet key) const;
    /// Lattice index of Fix(w).
    int fix_of(int w) const { return fix_of_[w]; }
    int shape_of(int w) const { return lattice_[fix_of_[w]].shape; }
    bool is_cuspidal(int w) const { return lattice_[fix_of_[w]].codim == group_->rank(); }
    /// Reflections of the standard parabolic W_I (roots supported in I).
    ReflectionSet parabolic_key(Subset i) const;
    int lattice_of_subset(Subset i) const { return find(parabolic_key(i)); }
    /// Image of a reflection set under w.
    ReflectionSet translate(int w, ReflectionSet key) const;

    const std::vector<Shape>& shapes() const { return shapes_; }
    const Shape& shape(int id) const { return shapes_[id]; }

    /// Elements of the pointwise stabilizer W_X.
    std::vector<int> pointwise_stabilizer(int lattice_index) const;
    /// Elements of N_W(W_X) = setwise stabilizer of X.
    std::vector<int> setwise_stabilizer(int lattice_index) const;
    CuspidalStructure cuspidal_structure(int shape_id) const;

    /// α_X(n) = det n|_X; throws std::invalid_argument unless n(X) = X.
    CycloNumber alpha(int lattice_index, int n) const;
    /// α_c(z) = det z|_{Fix(c)}.
    CycloNumber alpha_c(int c, int z) const { return alpha(fix_of_[c], z); }

private:
    const CoxeterGroup* group_;
    std::vector<LatticeElement> lattice_;
    std::unordered_map<ReflectionSet, int> index_;
    std::vector<int> fix_of_;
    std::vector<Shape> shapes_;
};

/// Conjugacy classes of a subgroup (given as an element list closed under
/// multiplication), as sorted element lists ordered by least element.
std::vector<std::vector<int>> subgroup_classes(const CoxeterGroup& g, const std::vector<int>& subgroup);

}  // namespace coxwitness
