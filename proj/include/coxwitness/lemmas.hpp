#pragma once

#include <cstdint>

#include "coxwitness/context.hpp"
#include "coxwitness/report.hpp"

namespace coxwitness {

struct LemmaOptions {
    std::uint64_t seed = 1;
    /// Random samples per property.
    int samples = 200;
    /// Extra random weight functions tried alongside the context's σ.
    int random_sigmas = 3;
};

/// Identities of the descent algebra, the quasi-idempotents and the
/// Orlik-Solomon algebra: exact checks over all subsets and shapes, then
/// seeded random sampling for the translation/restriction lemmas, reducible
/// products, Frobenius reciprocity, the W-action on A and α_X.
/// The seed only selects samples; it never changes what is being checked.
VerificationReport verify_lemmas(const GroupContext& ctx, const LemmaOptions& opts = {});

/// σ(I) = p/q with 1 ≤ p, q ≤ 9 for every I ⊆ S.
Sigma random_sigma(const CoxeterGroup& g, std::uint64_t seed);

}  // namespace coxwitness
