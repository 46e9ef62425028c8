#pragma once

#include <cstddef>
#include <functional>

namespace qgase {

/// Worker count for data-parallel loops: QGASE_THREADS if set (>= 1),
/// otherwise std::thread::hardware_concurrency().
int worker_count();

/// Runs f(i) for every i in [0, n). Workers pull fixed-size chunks from an
/// atomic counter; since each call writes only to its own slot, results are
/// independent of scheduling. Exceptions are captured and rethrown in the
/// caller. Nested calls run serially inside worker threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace qgase
