#pragma once
#include <cstddef>
#include <functional>

namespace mhelm {

// Process-wide worker budget for the chunked parallel loops.
// 0 = auto (hardware concurrency). Set from --threads / MESHLESS_HELM_THREADS.
void set_thread_budget(int k);
int thread_budget();

// Splits [0, count) into contiguous chunks and runs body(begin, end) on the
// worker pool. Runs inline when the budget is 1 or the range is small.
// The first exception thrown by any chunk is rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace mhelm
