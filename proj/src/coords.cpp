#include "conifold/coords.hpp"

namespace conifold {

namespace {
const complexd I{0.0, 1.0};
}

ComplexVec4 z_of(const PhasePoint& q) {
  ComplexVec4 z;
  for (int j = 0; j < 4; ++j) z.v[j] = complexd(q.x[j], q.p[j]);
  z.system = CoordSystem::Z;
  return z;
}

PhasePoint phase_of_z(const ComplexVec4& z) {
  if (z.system != CoordSystem::Z)
    throw std::invalid_argument("phase_of_z: input must carry the z tag");
  PhasePoint q;
  for (int j = 0; j < 4; ++j) {
    q.x[j] = z.v[j].real();
    q.p[j] = z.v[j].imag();
  }
  return q;
}

ComplexVec4 coords_zw(const ComplexVec4& point, CoordSystem target) {
  if (point.system == target)
    throw std::invalid_argument("coords_zw: point already carries the target tag");
  ComplexVec4 out;
  out.system = target;
  const CVec4& a = point.v;
  if (target == CoordSystem::W) {
    out.v[0] = a[0] + I * a[1];
    out.v[1] = -a[2] + I * a[3];
    out.v[2] = a[2] + I * a[3];
    out.v[3] = a[0] - I * a[1];
  } else {
    out.v[0] = 0.5 * (a[0] + a[3]);
    out.v[1] = -0.5 * I * (a[0] - a[3]);
    out.v[2] = 0.5 * (a[2] - a[1]);
    out.v[3] = -0.5 * I * (a[1] + a[2]);
  }
  return out;
}

XiEta coords_xieta(const PhasePoint& q) {
  XiEta s;
  s.xi[0] = complexd(q.x[0], q.x[1]);
  s.xi[1] = complexd(q.x[2], q.x[3]);
  s.eta[0] = complexd(q.p[0], q.p[1]);
  s.eta[1] = complexd(q.p[2], q.p[3]);
  return s;
}

PhasePoint phase_of_xieta(const XiEta& s) {
  PhasePoint q;
  q.x[0] = s.xi[0].real();
  q.x[1] = s.xi[0].imag();
  q.x[2] = s.xi[1].real();
  q.x[3] = s.xi[1].imag();
  q.p[0] = s.eta[0].real();
  q.p[1] = s.eta[0].imag();
  q.p[2] = s.eta[1].real();
  q.p[3] = s.eta[1].imag();
  return q;
}

ComplexVec4 w_of_xieta(const XiEta& s) {
  ComplexVec4 w;
  w.system = CoordSystem::W;
  w.v[0] = s.xi[0] + I * s.eta[0];
  w.v[1] = -(std::conj(s.xi[1]) + I * std::conj(s.eta[1]));
  w.v[2] = s.xi[1] + I * s.eta[1];
  w.v[3] = std::conj(s.xi[0]) + I * std::conj(s.eta[0]);
  return w;
}

TangentVec complex_J_apply(const TangentVec& v, ComplexStructureKind structure) {
  TangentVec out;
  out.base = v.base;
  if (structure == ComplexStructureKind::standard_z) {
    out.d << -v.dp(), v.dx();
    return out;
  }
  // multiplication by i inside xi1 = x1+ix2, xi2 = x3+ix4 and likewise eta
  auto rot = [](const Vec4& a) {
    Vec4 b;
    b << -a[1], a[0], -a[3], a[2];
    return b;
  };
  out.d << rot(v.dx()), rot(v.dp());
  return out;
}

CVec4 w_of_tangent(const Vec8& d) {
  CVec4 dz;
  for (int j = 0; j < 4; ++j) dz[j] = complexd(d[j], d[4 + j]);
  CVec4 dw;
  dw[0] = dz[0] + I * dz[1];
  dw[1] = -dz[2] + I * dz[3];
  dw[2] = dz[2] + I * dz[3];
  dw[3] = dz[0] - I * dz[1];
  return dw;
}

Vec8 tangent_of_w(const CVec4& dw) {
  CVec4 dz;
  dz[0] = 0.5 * (dw[0] + dw[3]);
  dz[1] = -0.5 * I * (dw[0] - dw[3]);
  dz[2] = 0.5 * (dw[2] - dw[1]);
  dz[3] = -0.5 * I * (dw[1] + dw[2]);
  Vec8 d;
  for (int j = 0; j < 4; ++j) {
    d[j] = dz[j].real();
    d[4 + j] = dz[j].imag();
  }
  return d;
}

}  // namespace conifold
