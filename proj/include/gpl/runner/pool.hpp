#pragma once

#include <cstddef>
#include <functional>

namespace gpl::runner {

/// Worker count: `requested` if nonzero, else GPL_THREADS if set and
/// positive, else the hardware concurrency (at least 1).
unsigned worker_count(unsigned requested = 0);

/// Runs body(i) for i in [0, count) on up to `workers` threads. Indices are
/// handed out dynamically; the body must write only to slot i of its output.
/// The first exception thrown by a body is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace gpl::runner
