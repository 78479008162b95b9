#pragma once

#include <functional>
#include <vector>

#include "conifold/config.hpp"

namespace conifold {

/// Runs fn(begin, end) over a static partition of [0, n). Chunk boundaries
/// depend only on n and the worker count, so per-chunk results combined in
/// index order give deterministic reductions regardless of thread timing.
void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t, int)>& fn);

/// Deterministic parallel max: reduces fn(i) over i in [0, n).
double parallel_max(std::int64_t n, const std::function<double(std::int64_t)>& fn);

/// Deterministic parallel min.
double parallel_min(std::int64_t n, const std::function<double(std::int64_t)>& fn);

}  // namespace conifold
