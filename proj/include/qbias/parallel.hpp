#pragma once

#include <cstddef>
#include <functional>

namespace qbias {

// Number of workers used for `jobs` independent tasks: the QBIAS_THREADS
// environment variable when set to a positive integer, otherwise the
// hardware concurrency, clamped to the job count.
std::size_t worker_count(std::size_t jobs);

// Runs fn(0), ..., fn(count - 1), possibly concurrently. Callers get
// deterministic results by writing to preallocated per-index slots. The
// first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace qbias
