#pragma once

#include <cstddef>
#include <functional>

namespace mink4 {

// Number of worker threads: MINK4_THREADS if set (clamped to [1,64]),
// otherwise std::thread::hardware_concurrency().
int worker_count();

// Runs fn(i) for i in [0,n). Work is split into contiguous static chunks, so
// results written to preallocated slots are identical for any thread count.
// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace mink4
