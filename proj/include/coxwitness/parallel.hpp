#pragma once

#include <cstddef>
#include <functional>

namespace coxwitness {

/// Worker count: COXWITNESS_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
int thread_count();

/// Calls body(i) for every i in [0, n), spread over thread_count() threads.
/// Callers write results into slot i so the merged output does not depend on scheduling.
/// The first exception thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace coxwitness
