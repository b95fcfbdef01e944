#pragma once

#include <cstddef>
#include <functional>

namespace rrf {

// Number of workers used by parallel_for: the RRF_THREADS environment
// variable when set, otherwise one per logical core.
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Work items must be independent; results
// keyed by index are identical no matter how many workers run, so all
// callers stay deterministic under any RRF_THREADS setting.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rrf
