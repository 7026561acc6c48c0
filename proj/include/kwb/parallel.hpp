#pragma once

#include <cstddef>
#include <functional>

namespace kwb {

// Worker count: KWB_THREADS (clamped to >= 1) if set, hardware concurrency
// otherwise.
unsigned thread_cap();

// Runs fn(i) for every i in [0, count).  fn must be safe to call from
// multiple threads; the first exception thrown is rethrown after all
// workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace kwb
