#pragma once

#include <cstddef>
#include <functional>

namespace dnnclust {

/// Thread count from the DNNCLUST_THREADS environment variable, or 1 when it
/// is unset or unparsable. Results never depend on the worker count; it only
/// trades wall time.
int default_thread_count();

/// Run fn(begin, end) over [0, n) split into `threads` contiguous blocks.
/// threads <= 0 means default_thread_count(). Blocks are disjoint, so any
/// per-index output is identical for every worker count.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace dnnclust
