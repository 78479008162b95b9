#include "conifold/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>

namespace conifold {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("CONIFOLD_LAB_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) hw = std::min(hw, cap);
  }
  return hw;
}

void parallel_chunks(std::int64_t n,
                     const std::function<void(std::int64_t, std::int64_t, int)>& fn) {
  int workers = std::min<std::int64_t>(worker_count(), std::max<std::int64_t>(n, 1));
  if (workers <= 1 || n < 256) {
    fn(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::int64_t lo = w * chunk;
    std::int64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi, w] { fn(lo, hi, w); });
  }
  for (auto& t : pool) t.join();
}

double parallel_max(std::int64_t n, const std::function<double(std::int64_t)>& fn) {
  int workers = worker_count();
  std::vector<double> partial(static_cast<size_t>(workers),
                              -std::numeric_limits<double>::infinity());
  parallel_chunks(n, [&](std::int64_t lo, std::int64_t hi, int w) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::int64_t i = lo; i < hi; ++i) m = std::max(m, fn(i));
    partial[static_cast<size_t>(w)] = m;
  });
  double m = -std::numeric_limits<double>::infinity();
  for (double v : partial) m = std::max(m, v);
  return m;
}

double parallel_min(std::int64_t n, const std::function<double(std::int64_t)>& fn) {
  return -parallel_max(n, [&fn](std::int64_t i) { return -fn(i); });
}

}  // namespace conifold
