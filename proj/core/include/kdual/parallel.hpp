#pragma once

#include <cstddef>
#include <functional>

namespace kdual {

/// Worker count: KDUAL_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t worker_threads();

/// Runs body(i) for i in [0, count) on up to worker_threads() threads.
/// The first exception thrown by any task is rethrown after all finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace kdual
