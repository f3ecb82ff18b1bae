#pragma once

#include <cstddef>
#include <functional>

namespace cross {

// Worker cap: min(hardware_concurrency, CROSS_SPEC_THREADS if set).
unsigned worker_count();

// Runs fn(i) for i in [0, n). Results must be written to index-addressed
// storage so the merged outcome is deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace cross
