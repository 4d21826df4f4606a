#pragma once

#include <vector>

#include "coxwitness/arrangement.hpp"
#include "coxwitness/characters.hpp"
#include "coxwitness/context.hpp"
#include "coxwitness/descent.hpp"
#include "coxwitness/orlik_solomon.hpp"
#include "coxwitness/report.hpp"

namespace coxwitness {

/// Outcome of the search for linear characters φ_c (c ∈ 𝒞_λ) with
/// char E_λ = Σ Ind φ_c and char A_λ = Σ Ind(ε·α_c·φ_c).
struct ShapeSearch {
    int shape = 0;
    std::vector<int> reps;                                // class representatives c ∈ 𝒞_λ
    std::vector<std::vector<LinearCharacter>> candidates;  // linear characters of Z_W(c), per rep
    std::vector<std::vector<int>> solutions;               // candidate index per rep
    ClassFunction char_e;
    ClassFunction char_a;
    /// char E_λ − Σ Ind φ_c and char A_λ − Σ Ind(ε α_c φ_c) for all-trivial φ_c; reported when no solution exists.
    ClassFunction residual_e;
    ClassFunction residual_a;
    bool verified() const { return !solutions.empty(); }
};

struct ConjectureOptions {
    Sigma sigma;
    bool first_only = false;
};

/// Characters of E_λ^σ for every shape, via the trace formula on e_λ^σ ℚW.
std::vector<ClassFunction> shape_ideal_characters(const DescentAlgebra& da, const Sigma& sigma);

ShapeSearch search_shape(const Arrangement& arr, const ClassFunction& char_e, const ClassFunction& char_a,
                         int shape, bool first_only);

struct ConjectureReport {
    std::vector<ShapeSearch> shapes;
    bool verified() const;
    Json to_json(const CoxeterGroup& g) const;
};

ConjectureReport verify_conjecture(const GroupContext& ctx, bool first_only = false);
ConjectureReport verify_conjecture(const CoxeterGroup& g, const ConjectureOptions& opts = {});

}  // namespace coxwitness
