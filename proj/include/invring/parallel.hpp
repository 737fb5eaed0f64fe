#ifndef INVRING_PARALLEL_HPP
#define INVRING_PARALLEL_HPP

/// Minimal deterministic work partitioning.  Callers split an index range
/// into contiguous chunks, one per worker; results must be merged in index
/// order by the caller, so output never depends on the thread count.

#include <functional>

namespace invring {

/// Machine parallelism (at least 1).
int default_thread_count();

/// Runs fn(begin, end) over a partition of [0, count) into at most
/// `threads` contiguous chunks, each on its own worker (the caller runs the
/// last chunk).  fn must be safe to run concurrently on disjoint ranges; any
/// shared state it reads must be fully initialized beforehand.
void parallel_ranges(int count, int threads, const std::function<void(int, int)>& fn);

}  // namespace invring

#endif
