#pragma once

#include <cstddef>
#include <functional>

namespace cogcap {

/// Number of worker threads used when a caller passes 0: the COGCAP_THREADS
/// environment variable if set, else the hardware concurrency.
std::size_t default_thread_count();

/// Runs body(i) once for every i in [0, count). Callers write results by
/// index, so output never depends on the thread count or schedule. The first
/// exception thrown by any worker is rethrown on the calling thread.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace cogcap
