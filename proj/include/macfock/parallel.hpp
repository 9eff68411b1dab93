#pragma once

#include <cstddef>
#include <functional>

namespace macfock {

// True when OpenMP is compiled in, more than one thread is available, and the
// MACFOCK_SERIAL environment toggle is not set.
bool parallel_enabled();

// Runs fn(i) for i in [0, n), in parallel when permitted.  Results must not
// depend on execution order; exceptions are collected and rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Serial reference loop with the same contract, kept for the kernel tests and
// the benchmark comparison.
void serial_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace macfock
