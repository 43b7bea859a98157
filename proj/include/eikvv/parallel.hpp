#pragma once

#include <cstddef>
#include <functional>

namespace eikvv {

/// Worker cap from EIKONAL_VV_THREADS (unset or 0 = hardware concurrency).
std::size_t worker_count();

/// Calls body(i) for i in [0, n), spread over up to `workers` threads. Nested
/// calls from inside a worker run serially. The first exception thrown by any
/// body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t workers = worker_count());

}  // namespace eikvv
