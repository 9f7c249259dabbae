#pragma once

#include <cstddef>
#include <functional>

namespace thetacodes {

/// Worker count for parallel loops; 0 restores the default
/// (THETACODES_THREADS, else hardware concurrency).
void set_thread_count(unsigned n);
unsigned thread_count();

/// Runs body(i) for i in [0, n) across worker threads; blocks until done.
/// Exceptions from body are rethrown (the first one wins).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace thetacodes
