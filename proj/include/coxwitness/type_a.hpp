#pragma once

#include <string>
#include <vector>

#include "coxwitness/characters.hpp"
#include "coxwitness/context.hpp"
#include "coxwitness/coxeter.hpp"
#include "coxwitness/group_algebra.hpp"
#include "coxwitness/report.hpp"

namespace coxwitness {

// Symmetric groups. W must be of type A_r, viewed as S_{r+1} acting on 1..r+1
// with s_i = (i, i+1).

/// c_i = s_{i-1}⋯s_2 s_1 (an i-cycle), c_1 = 1; 1 ≤ i ≤ rank+1.
int cycle_element(const CoxeterGroup& g, int i);
/// Coefficient of t^k in (1 - c_1 t)(1 - c_2 t)⋯(1 - c_n t); 0 ≤ k ≤ n ≤ rank+1.
GroupAlgebraElement b_plus(const CoxeterGroup& g, int n, int k);
/// Coefficient of t^k in Π_{j=1..n} (1 + (-1)^{j-1} c_{n-j+1} t); with
/// `inverse_cycles` each c_i is replaced by c_i⁻¹.
GroupAlgebraElement b_minus(const CoxeterGroup& g, int n, int k, bool inverse_cycles = false);
/// (1/m) Σ_k φ(c^k) c^{-k}, with φ(c⁻¹) = ζ_m and m the order of c; with `minus`
/// the terms are also weighted by ε(c)^k.
GroupAlgebraElement cyclic_idempotent(const CoxeterGroup& g, int c, bool minus);

/// Partitions of n in decreasing lexicographic order, parts non-increasing.
std::vector<std::vector<int>> partitions(int n);

struct PartitionData {
    std::vector<int> parts;
    std::vector<int> tau;  // partial sums τ_0 = 0, …, τ_p = n
    Subset i_lambda = 0;   // S ∖ {s_{τ_1}, …, s_{τ_{p-1}}}
    std::vector<int> cycles;  // g_{λ_i}: the λ_i-cycle on τ_{i-1}+1, …, τ_i
    int c_lambda = 0;         // g_{λ_1}⋯g_{λ_p}
};

/// Requires W = S_n with n = Σ parts.
PartitionData partition_data(const CoxeterGroup& g, const std::vector<int>& parts);
std::string partition_label(const std::vector<int>& parts);

// Parabolic subgroups of type A in an arbitrary W.

struct RelativeSetup {
    const CoxeterGroup* group = nullptr;
    Subset parabolic = 0;
    /// Components L_i in order (l_i decreasing, then least generator); each listed
    /// as the path s_{i,1}, …, s_{i,l_i} starting at its smaller-index end.
    std::vector<std::vector<int>> components;
    std::vector<int> cycles;   // c_i = s_{i,l_i}⋯s_{i,1}
    std::vector<int> longest;  // w_i
    int c = 0;
    std::vector<int> r;  // r_1..r_{p-1}; 0 when n_i ≠ n_{i+1} or no element of N_L acts as required
    std::vector<int> g;  // g_1..g_p; 0 when no element of N_L flips L_i alone
    std::vector<int> h;  // h_i = g_i w_i, or 1
    std::vector<int> parabolic_elements;  // W_L
    std::vector<int> normalizer;          // N_W(W_L)
    std::vector<int> complement;          // N_L = {n : n(Δ_L) = Δ_L}
    std::vector<int> kernel;              // elements of N_L fixing every s ∈ L
    /// N_c: the image of N_L under n ↦ (Π w_j over components flipped by n)·n.
    std::vector<int> nc;
    std::vector<int> centralizer;          // Z_W(c)
    std::vector<int> parabolic_centralizer;  // Z_{W_L}(c)
    /// φ_c on Z_{W_L}(c) with φ_i(c_i⁻¹) = ζ_{n_i}.
    LinearCharacter phi_c;
    /// Extension of φ_c to Z_W(c) = Z_{W_L}(c)·N_c: φ̃(y·lift(n)) = φ_c(y)·Π_{flipped} (-1)^{l_i}.
    LinearCharacter phi_tilde;

    int num_components() const { return static_cast<int>(components.size()); }
    int size_of(int i) const { return static_cast<int>(components[i].size()); }
    bool phi_tilde_trivial_on_nc() const;
    Json to_json() const;
};

/// Throws std::invalid_argument naming the first component of L that is not of type A.
RelativeSetup relative_setup(const CoxeterGroup& g, Subset parabolic);

/// Every identity of the relative construction for one L, against a shared context.
CheckList check_relative(const GroupContext& ctx, const RelativeSetup& rs);

/// One L, or (parabolic < 0) one type-A L per shape, lex-least in S_λ.
VerificationReport verify_relative(const GroupContext& ctx, std::int64_t parabolic = -1);
/// The standard parabolic subsets whose components are all of type A, one per shape.
std::vector<Subset> type_a_parabolics(const GroupContext& ctx);

/// λ = (n) in S_n: Solomon-Lehrer style presentation of E_n and A_n and the
/// induced-character theorem; 2 ≤ n ≤ 6.
VerificationReport verify_section5(int n);
/// Every partition of n: the relative construction with L = I_λ plus the
/// extra symmetric-group facts (g_i = 1, N_c = N_L, α_λ(r_i) = -1); 2 ≤ n ≤ 6.
VerificationReport verify_section6(int n);

}  // namespace coxwitness
