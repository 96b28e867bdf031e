#pragma once

#include <cstddef>
#include <functional>

namespace smoothlab {

// Worker count: SMOOTHNESS_LAB_THREADS if set (>= 1), else the hardware count.
unsigned thread_count();

// Runs body(i) for i in [0, n). Each index is visited once; callers write
// results into slot i, so output order never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace smoothlab
