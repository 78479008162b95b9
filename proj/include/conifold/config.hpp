#pragma once

#include <cstdint>

namespace conifold {

/// Three-tier tolerances: exact identities, first derivatives, and
/// second-derivative/curvature quantities. Finite-difference noise grows
/// with derivative order, so the tiers are kept separate.
struct Tolerances {
  double identity = 1e-12;
  double first_deriv = 1e-8;
  double second_deriv = 1e-5;
};

/// Central-difference configuration. The step is relative to the base-point
/// scale (an absolute floor of `step` is used near the origin).
struct FdConfig {
  double step = 1e-5;
  bool richardson = false;
};

/// Returns the worker count: CONIFOLD_LAB_THREADS caps it when set,
/// otherwise hardware concurrency.
int worker_count();

}  // namespace conifold
