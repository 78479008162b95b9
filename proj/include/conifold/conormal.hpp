#pragma once

#include <array>

#include "conifold/frame.hpp"
#include "conifold/types.hpp"

namespace conifold {

/// Fiber coordinates of the conormal parametrization (t, alpha, beta) with
/// the polar view r = sqrt(alpha^2+beta^2), theta = atan2(beta, alpha).
struct ConormalCoords {
  double t = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  double r() const { return std::hypot(alpha, beta); }
  double theta() const { return std::atan2(beta, alpha); }

  static ConormalCoords polar(double t, double theta, double r) {
    return {t, r * std::cos(theta), r * std::sin(theta)};
  }
};

/// (k(t), alpha p1 + beta p2); lies on T*S^3 with p orthogonal to k and tau.
PhasePoint conormal_point(const FrameField& field, const ConormalCoords& c);

/// (k(t), alpha p1 + beta p2 + eps tau); the fiber shift along the unit
/// tangent keeps |p|^2 = alpha^2 + beta^2 + eps^2 exactly, so the bundle is
/// disjoint from the zero section for eps > 0.
PhasePoint perturbed_conormal_point(const FrameField& field, double eps,
                                    const ConormalCoords& c);

/// Pushforwards of d/dt, d/dalpha, d/dbeta through the (perturbed)
/// parametrization; analytic in the knot jet, frame derivatives from the
/// frame field's jet.
std::array<TangentVec, 3> conormal_tangent_basis(const FrameField& field, double eps,
                                                 const ConormalCoords& c);

struct PerturbationFieldConfig {
  double tube_radius = 0.0;   ///< angular; 0 = half the sampled self-distance
  double plateau_lo = 0.05;   ///< radial plateau start (typically eps/2)
  double plateau_hi = 4.0;    ///< radial plateau end
};

/// Compactly supported extension of the unit tangent off the knot:
///   xi(x) = chi(|x|) psi(d) tau(t*),
/// with t* the nearest-parameter projection of x/|x| onto the knot, d the
/// spherical distance to the knot, psi a C^1 profile equal to 1 at d = 0 and
/// 0 beyond the tube radius, chi a radial cutoff equal to 1 on the plateau.
/// Radially constant on the plateau, so the contraction square commutes there.
class PerturbationField {
 public:
  PerturbationField(KnotCurve knot, PerturbationFieldConfig cfg = {});

  Vec4 value(const Vec4& x) const;
  Mat4 jacobian(const Vec4& x) const;  // central differences

  double tube_radius() const { return cfg_.tube_radius; }
  const PerturbationFieldConfig& config() const { return cfg_; }
  const KnotCurve& knot() const { return knot_; }

  /// Nearest-parameter projection of a unit vector onto the knot and the
  /// spherical distance to it.
  struct Projection {
    double t = 0.0;
    double angular_distance = 0.0;
  };
  Projection project(const Vec4& unit) const;

  /// Empirical sup of the Jacobian operator norm over a dense deterministic
  /// sample of the support shell |x| in [shell_lo, shell_hi].
  struct NormMeasurement {
    double sigma = 0.0;
    std::int64_t samples = 0;
    double shell_lo = 0.0, shell_hi = 0.0;
  };
  NormMeasurement measure_jacobian_norm(double shell_lo, double shell_hi,
                                        std::uint64_t seed, int t_samples = 96,
                                        int d_samples = 10, int s_samples = 6) const;

 private:
  KnotCurve knot_;
  FrameField frames_;
  PerturbationFieldConfig cfg_;
  std::vector<Vec4> coarse_;  // projection scan table
};

}  // namespace conifold
