#pragma once

#include <vector>

#include "coxwitness/arrangement.hpp"
#include "coxwitness/characters.hpp"
#include "coxwitness/descent.hpp"
#include "coxwitness/orlik_solomon.hpp"

namespace coxwitness {

/// Everything derived from W that the verifiers share: the arrangement, the
/// descent algebra with its quasi-idempotents for one σ, the Orlik-Solomon
/// algebra, and the characters of E_λ^σ and A_λ for every shape.
class GroupContext {
public:
    explicit GroupContext(const CoxeterGroup& g, Sigma sigma = {});
    GroupContext(const GroupContext&) = delete;
    GroupContext& operator=(const GroupContext&) = delete;

    const CoxeterGroup& group() const { return *group_; }
    const Arrangement& arrangement() const { return arrangement_; }
    const DescentAlgebra& descent() const { return descent_; }
    const BbhtSolution& solution() const { return solution_; }
    const OrlikSolomon& os() const { return os_; }
    const Sigma& sigma() const { return solution_.sigma; }

    const std::vector<ClassFunction>& char_e() const { return char_e_; }
    const std::vector<ClassFunction>& char_a() const { return char_a_; }

private:
    const CoxeterGroup* group_;
    Arrangement arrangement_;
    DescentAlgebra descent_;
    BbhtSolution solution_;
    OrlikSolomon os_;
    std::vector<ClassFunction> char_e_;
    std::vector<ClassFunction> char_a_;
};

}  // namespace coxwitness
