#pragma once

#include <cstddef>
#include <functional>

namespace tspec {

// Number of worker threads used by the library. A value <= 0 restores the
// default (hardware concurrency).
void set_thread_count(int count);
int thread_count();

// Splits [0, count) into contiguous blocks and runs body(begin, end) on each,
// one block per worker. The first exception thrown by any block is rethrown.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace tspec
