#pragma once

#include <cstddef>
#include <functional>

namespace placement {

/// Worker count: PLACEMENT_OPT_THREADS if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads.
/// Iterations must write to disjoint outputs. The first exception thrown by
/// any iteration is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace placement
