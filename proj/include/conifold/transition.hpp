#pragma once

#include "conifold/conormal.hpp"
#include "conifold/coords.hpp"
#include "conifold/types.hpp"

namespace conifold {

/// Contraction F(x,p) = (|p| x, p); sends T*S^3 onto the cone, zero section
/// to the origin. Throws on points off T*S^3 beyond tol.
PhasePoint contract_F(const PhasePoint& pt, double tol = 1e-8);

/// F_a(x,p) = (x sqrt(a^2 + |p|^2), p) onto the smooth quadric, a > 0.
PhasePoint contract_Fa(double a, const PhasePoint& pt, double tol = 1e-8);

/// Regularized contraction F_eps(x,p) = (x sqrt(|p|^2 + eps^2), p).
PhasePoint contract_Feps(double eps, const PhasePoint& pt, double tol = 1e-8);

enum class IsotopyDirection { forward, inverse };

/// The fiber-shift isotopy (x, p +- eps xi(x)).
PhasePoint isotopy_phi(const PerturbationField& field, double eps, const PhasePoint& pt,
                       IsotopyDirection dir);

/// A point of the small resolution: a line of CP^1 with a w-vector on it.
struct ResolvedPoint {
  ProjPoint line;
  CVec4 w = CVec4::Zero();

  /// Determinant constraints |v w1 - u w2|, |v w3 - u w4|.
  double constraint_residual() const;
  /// Affine trace coordinate u/v of the line.
  complexd trace() const { return line.affine(); }
};

/// Lift of a nonzero cone point through the resolution; the line is read off
/// the pair (w1,w2) or (w3,w4) of larger norm (ties toward the first pair).
ResolvedPoint resolve_lift(const CVec4& w, double tol = 1e-8);
/// Same with the pair pinned by the caller (0 or 1); used to keep finite
/// difference stencils inside a single chart.
ResolvedPoint resolve_lift_pair(const CVec4& w, int pair, double tol = 1e-8);
/// Which pair resolve_lift would pick.
int lift_pair_choice(const CVec4& w);

/// Chart coordinates (z, xi, eta) of the cone; chart 1 embeds as
/// (xi, z xi, eta, z eta), chart 2 as (z xi, xi, z eta, eta).
struct ChartPoint {
  complexd z, xi, eta;
  int chart = 1;
};

CVec4 cone_chart_embed(const ChartPoint& cp);
ChartPoint cone_chart_invert(const CVec4& w, double tol = 1e-8);

/// Full transition pipeline for one fiber point: perturbed conormal point,
/// contraction, w-coordinates, lift. Requires eps > 0 (the image stays at
/// |w| >= 2 eps away from the node).
ResolvedPoint ct_point(const FrameField& field, double eps, const ConormalCoords& c);
/// Chart-pinned variant for finite-difference stencils.
ResolvedPoint ct_point_pair(const FrameField& field, double eps, const ConormalCoords& c,
                            int pair);

/// Closed form of the transited unknot conormal: line [i e^{i(t+theta)} : 1],
/// w = (alpha b, b, conj(b), conj(alpha b)) with b = -i r e^{-i theta}.
/// r = 0 is the exceptional-fiber closure point.
ResolvedPoint ct_unknot_oracle(double t, double theta, double r);

/// Affine CP^1 trace of the transited (m,n) torus-knot conormal at the
/// collapsed edge, as a function of (t, theta).
complexd torus_trace(int m, int n, double t, double theta);

}  // namespace conifold
