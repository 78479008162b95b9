#pragma once

#include "conifold/types.hpp"

namespace conifold {

/// Packs (x,p) into z_j = x_j + i p_j.
ComplexVec4 z_of(const PhasePoint& q);
PhasePoint phase_of_z(const ComplexVec4& z);

/// The coordinate change between the z and w systems:
///   w1 = z1 + i z2,  w2 = -z3 + i z4,  w3 = z3 + i z4,  w4 = z1 - i z2.
/// It is sqrt(2) times a unitary map, and sum z_j^2 = 0 iff w1 w4 = w2 w3.
ComplexVec4 coords_zw(const ComplexVec4& point, CoordSystem target);

/// The split packing xi = (x1+ix2, x3+ix4), eta = (p1+ip2, p3+ip4).
struct XiEta {
  CVec2 xi = CVec2::Zero();
  CVec2 eta = CVec2::Zero();
};

XiEta coords_xieta(const PhasePoint& q);
PhasePoint phase_of_xieta(const XiEta& s);

/// w-coordinates straight from the split packing:
///   w1 = xi1 + i eta1,  w2 = -(conj(xi2) + i conj(eta2)),
///   w3 = xi2 + i eta2,  w4 = conj(xi1) + i conj(eta1).
/// Agrees with coords_zw composed with the z packing.
ComplexVec4 w_of_xieta(const XiEta& s);

/// Which complex structure acts on a tangent vector of R^4 x R^4.
enum class ComplexStructureKind {
  standard_z,   ///< J dx_i = dp_i, J dp_i = -dx_i (multiplication by i in z)
  split_xieta,  ///< multiplication by i inside the (xi, eta) pairing
};

/// Applies J to a tangent vector; J^2 = -identity, base point preserved.
TangentVec complex_J_apply(const TangentVec& v, ComplexStructureKind structure);

/// w-components of a real tangent vector (dx, dp) under the z -> w chain.
CVec4 w_of_tangent(const Vec8& d);
/// Inverse of w_of_tangent.
Vec8 tangent_of_w(const CVec4& dw);

}  // namespace conifold
