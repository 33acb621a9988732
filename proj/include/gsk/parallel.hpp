#pragma once

#include <cstddef>
#include <functional>

namespace gsk {

// Worker count: GSK_THREADS when set (>= 1), otherwise hardware concurrency.
std::size_t thread_count();

// Runs body(i) for i in [0,n). Work is split in contiguous blocks; each index is
// handled by exactly one thread, so per-index results never depend on the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gsk
