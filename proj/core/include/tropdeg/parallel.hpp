#pragma once

#include <cstddef>
#include <functional>

namespace tropdeg {

/// Worker count: TROPDEG_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned default_thread_count();

/// Runs body(begin, end) over contiguous chunks of [0, count) on up to
/// `threads` workers (0 = default_thread_count()).  Exceptions thrown by a
/// chunk are rethrown on the calling thread after all workers join.
void parallel_chunks(std::size_t count, unsigned threads,
                     const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace tropdeg
