#pragma once

#include <cstddef>
#include <functional>

namespace aerolink {

// Run fn(0) .. fn(n-1) across a pool of worker threads. Each index is claimed
// exactly once; callers write results into a preallocated slot per index, so
// output bytes cannot depend on the thread count or interleaving.
// threads = 0 means hardware concurrency.
void parallel_for_index(std::size_t n, unsigned threads,
                        const std::function<void(std::size_t)>& fn);

}  // namespace aerolink
