#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace cdepth {

// Worker budget for the parallel helpers; 0 restores the hardware default.
int thread_budget();
void set_thread_budget(int n);

// Runs fn(i) for i in [0, n). Results must be written to index-addressed
// storage; reductions happen afterwards in index order so outputs do not
// depend on the thread count. Rethrows the first exception raised.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace cdepth
