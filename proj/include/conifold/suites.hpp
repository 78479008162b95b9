#pragma once

#include <iosfwd>
#include <memory>

#include "conifold/mesh.hpp"
#include "conifold/report.hpp"
#include "conifold/verify.hpp"

namespace conifold {

struct RunConfig {
  std::string knot = "unknot";
  double eps = 0.1;
  int n_t = 64, n_theta = 64, n_r = 8;
  double r_min = 0.25, r_max = 2.0;
  std::uint64_t seed = 12345;
  double tube_radius = 0.0;  ///< perturbation-field tube; 0 = auto
  std::string fixture;       ///< curvature fixture override (s3, sphere2, clifford)
  std::string output;        ///< report / CSV path ("" = stdout)
  bool emit_timing = false;  ///< write measured wall time into the JSON report
  Tolerances tol;

  void validate() const;
  GridSpec ct_grid() const;  // (t wrap, theta wrap, r)
  ordered_json to_json() const;
  static RunConfig from_json(const ordered_json& j);
};

/// suite in {lagrangian, tame, bilipschitz, curvature, totally-real, stokes,
/// two-point, all}
Report run_suite(const std::string& suite, const RunConfig& cfg);

/// Measured constants: field Jacobian norm, taming constant, lift and chart
/// bi-Lipschitz constants, empirical 2-point constant, minimal totally real
/// angle, each against its predicted bound.
Report report_constants(const RunConfig& cfg);

/// Writes the transited-sample CSV (header + one row per grid point);
/// returns the row count.
std::int64_t ct_sample_csv(const RunConfig& cfg, std::ostream& os);

/// Builds the distance mesh for the configured transition and exports it.
void mesh_export_cmd(const RunConfig& cfg, const std::string& path);

// --- reusable measurement helpers (acceptance suite builds on these) --------

std::shared_ptr<const FrameField> field_for(const RunConfig& cfg);
std::shared_ptr<const PerturbationField> perturbation_for(const RunConfig& cfg);

/// Max |liouville| over unit conormal tangent vectors, eps = 0.
double conormal_liouville_max(const FrameField& field, int samples, std::uint64_t seed);

/// Max |omega(T_i, T_j)| over unit conormal tangent pairs, eps = 0.
double conormal_omega_max(const FrameField& field, int samples, std::uint64_t seed);

struct IsotropyMax {
  double omega_max = 0.0;
  double j_orth_max = 0.0;
};
/// Max |omega| and |g(J T_i, T_j)| over tangent pairs of the regularized
/// contraction image.
IsotropyMax feps_isotropy_max(const FrameField& field, double eps, int samples,
                              std::uint64_t seed);

/// Max | |trace| - 1 | of the transited unknot over a grid (first-order in
/// eps against the closed form).
double unknot_trace_deviation(const FrameField& field, double eps, const GridSpec& grid);

struct TraceRange {
  double lo = 0.0, hi = 0.0;
};
/// Range of the transited trace modulus over the grid.
TraceRange ct_trace_range(const FrameField& field, double eps, const GridSpec& grid);
/// Range of the closed-form collapsed-edge trace modulus over a dense sweep.
TraceRange torus_trace_envelope(int m, int n, int sweep = 4096);

/// Random disc with boundary on the conormal bundle (cone over a smooth
/// random loop in fiber coordinates).
MapRn make_conormal_disc(std::shared_ptr<const FrameField> field, std::uint64_t seed);

/// Dilation factors of sampled polygonal paths under the fixed-|p| slice
/// scaling map; returns min and max of length ratios over the samples.
struct ScalingRange {
  double lo = 0.0, hi = 0.0;
};
ScalingRange sr_scaling_range(const FrameField& field, double eps, double r, int paths,
                              std::uint64_t seed);

}  // namespace conifold
