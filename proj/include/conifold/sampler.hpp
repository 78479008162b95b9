#pragma once

#include <memory>
#include <string>
#include <vector>

#include "conifold/fd.hpp"
#include "conifold/transition.hpp"

namespace conifold {

struct GridAxis {
  double lo = 0.0, hi = 1.0;
  int n = 2;
  bool wrap = false;
};

/// Tensor-product grid; wrap axes exclude the upper endpoint. Flat indices
/// are row-major with axis 0 slowest.
struct GridSpec {
  std::vector<GridAxis> axes;

  std::int64_t size() const;
  VectorXd at(std::int64_t flat) const;
  std::vector<int> indices(std::int64_t flat) const;
  double axis_value(int axis, int idx) const;

  /// Doubles the density keeping every original node (wrap n -> 2n,
  /// otherwise n -> 2n-1).
  GridSpec refined() const;
  /// Index of a coarse node inside the refined grid.
  std::int64_t refined_index(std::int64_t coarse_flat) const;
};

/// A parametrized submanifold with a sampling grid: map from a parameter box
/// into an ambient coordinate chart, plus tangent bases by analytic Jacobian
/// when available and central differences otherwise.
struct SubmanifoldSampler {
  std::string name;
  int param_dim = 0;
  int ambient_dim = 0;
  MapRn map;
  std::function<MatrixXd(const VectorXd&)> analytic_jacobian;  // optional
  /// Optional factory producing a map valid near `center` with all chart
  /// choices pinned, so stencils never straddle a chart switch.
  std::function<MapRn(const VectorXd& center)> local_map_factory;
  GridSpec grid;

  MapRn local_map(const VectorXd& center) const {
    return local_map_factory ? local_map_factory(center) : map;
  }
  MatrixXd tangent_basis(const VectorXd& u, const FdConfig& cfg = {}) const;
};

// --- builders ---------------------------------------------------------------

std::shared_ptr<const FrameField> make_frame_field(const KnotCurve& knot);

/// (t, alpha, beta) -> perturbed conormal point in the (x,p) chart of R^8.
SubmanifoldSampler conormal_sampler(std::shared_ptr<const FrameField> field, double eps,
                                    const GridSpec& grid);

/// (t, alpha, beta) -> F_eps of the unperturbed conormal, (x,p) chart.
SubmanifoldSampler feps_image_sampler(std::shared_ptr<const FrameField> field, double eps,
                                      const GridSpec& grid);

/// (t, alpha, beta) -> F of the perturbed conormal, (x,p) chart.
SubmanifoldSampler f_perturbed_image_sampler(std::shared_ptr<const FrameField> field,
                                             double eps, const GridSpec& grid);

/// (t, theta, r) -> transited perturbed conormal in the resolved chart
/// [Re z, Im z, w1..w4 interleaved]; lift pair and CP^1 chart pinned per
/// stencil center.
SubmanifoldSampler ct_sampler(std::shared_ptr<const FrameField> field, double eps,
                              const GridSpec& grid);

/// (t, theta, r) -> closed-form transited unknot conormal, resolved chart.
SubmanifoldSampler ct_unknot_oracle_sampler(const GridSpec& grid);

/// Fixed-|p| slice of the regularized contraction image, 2-parameter (t,
/// theta), (x,p) chart.
SubmanifoldSampler sr_slice_sampler(std::shared_ptr<const FrameField> field, double eps,
                                    double r, const GridSpec& grid);

/// Identity sampler over a box (open subsets of chart coordinates).
SubmanifoldSampler box_sampler(const GridSpec& grid, std::string name = "box");

/// Cone chart embedding (z, xi, eta) in R^6 -> w in R^8.
SubmanifoldSampler cone_embed_sampler(const GridSpec& grid);

/// Round 3-sphere of given radius in R^4, angle parametrization with an
/// analytic Jacobian (the pole-free box is the caller's business).
SubmanifoldSampler sphere3_sampler(double radius, const GridSpec& grid);

/// Clifford torus (1/sqrt2)(e^{iu}, e^{iv}) in R^4.
SubmanifoldSampler clifford_sampler(const GridSpec& grid);

/// Unit circle in R^2.
SubmanifoldSampler circle_sampler(int n);

/// S^1 x R in C x C = R^4, bounded window of the line factor.
SubmanifoldSampler s1xr_sampler(const GridSpec& grid);

/// Graph of sin(pi e^x) in R^2 over [x_lo, x_hi].
SubmanifoldSampler sin_exp_graph_sampler(double x_lo, double x_hi, int n);

}  // namespace conifold
