#include "coxwitness/context.hpp"

#include "coxwitness/parallel.hpp"

namespace coxwitness {

GroupContext::GroupContext(const CoxeterGroup& g, Sigma sigma)
    : group_(&g), arrangement_(g), descent_(g), solution_(descent_.solve(sigma)), os_(arrangement_)
{
    const std::size_t nshapes = arrangement_.shapes().size();
    char_e_.resize(nshapes);
    char_a_.resize(nshapes);
    parallel_for(nshapes, [&](std::size_t l) {
        char_e_[l] = ideal_character(descent_.to_group_algebra(descent_.e_lambda(solution_, static_cast<int>(l))));
        char_a_[l] = os_.shape_character(static_cast<int>(l));
    });
}

}  // namespace coxwitness
