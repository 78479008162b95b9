#pragma once

#include <vector>

#include "conifold/knot.hpp"

namespace conifold {

/// The orthonormal 4-frame (k, tau, p1, p2) at a knot parameter; tau is the
/// normalized velocity and p1, p2 span the normal plane of the conormal fiber.
struct Frame {
  Vec4 k, tau, p1, p2;

  Eigen::Matrix4d as_matrix() const {
    Eigen::Matrix4d m;
    m.col(0) = k;
    m.col(1) = tau;
    m.col(2) = p1;
    m.col(3) = p2;
    return m;
  }
};

/// Generalized cross product in R^4: the vector orthogonal to a, b, c with
/// components given by 3x3 cofactors.
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c);

/// Smooth periodic frame along a knot. Knots with a closed-form normal frame
/// use it directly; otherwise a seeded-continuation table is built once
/// (Gram-Schmidt seeded by the transported p1 of the previous grid node) and
/// the residual holonomy is unwound by a parameter-proportional rotation so
/// the frame closes up over a full period.
class FrameField {
 public:
  explicit FrameField(KnotCurve knot, int table_size = 2048);

  const KnotCurve& knot() const { return knot_; }

  Frame at(double t) const;

  /// p1, p2 and their t-derivatives. Closed form when available; otherwise a
  /// fourth-order stencil on the local continuation branch (fixed seed), so
  /// the derivative is taken of a function orthogonal to k identically in t.
  NormalFrameJet normal_jet(double t) const;

  /// Residual rotation angle of the raw transported frame over one period.
  double holonomy() const { return holonomy_; }

 private:
  Vec4 raw_p1(double t, const Vec4& seed) const;
  Frame frame_from_seed(double t, const Vec4& seed) const;
  const Vec4& seed_for(double t) const;

  KnotCurve knot_;
  bool analytic_ = false;
  int table_size_ = 0;
  double holonomy_ = 0.0;
  std::vector<Vec4> table_;
};

/// Convenience wrapper matching the operation-style call.
Frame frame_at(const FrameField& field, double t);

}  // namespace conifold
