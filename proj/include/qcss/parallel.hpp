#pragma once

#include <cstddef>
#include <functional>

namespace qcss {

/// Worker threads for enumeration and Monte Carlo: QCSS_THREADS if set and
/// positive, otherwise the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs task(i) for i in [0, tasks) on up to `workers` threads. Tasks are
/// claimed dynamically; callers must merge per-task results themselves.
void parallel_for(std::size_t tasks, const std::function<void(std::size_t)>& task, std::size_t workers = 0);

}  // namespace qcss
