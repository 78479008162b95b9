#include "conifold/transition.hpp"

#include <cmath>
#include <numeric>

namespace conifold {

namespace {
const complexd I{0.0, 1.0};

void require_cotangent(const PhasePoint& pt, double tol) {
  if (!pt.on_cotangent_sphere(tol))
    throw std::domain_error("point is not on T*S^3 within tolerance");
}
}  // namespace

PhasePoint contract_F(const PhasePoint& pt, double tol) {
  require_cotangent(pt, tol);
  PhasePoint out;
  out.x = pt.p.norm() * pt.x;
  out.p = pt.p;
  return out;
}

PhasePoint contract_Fa(double a, const PhasePoint& pt, double tol) {
  if (!(a > 0)) throw std::invalid_argument("deformation parameter a must be > 0");
  require_cotangent(pt, tol);
  PhasePoint out;
  out.x = std::sqrt(a * a + pt.p.squaredNorm()) * pt.x;
  out.p = pt.p;
  return out;
}

PhasePoint contract_Feps(double eps, const PhasePoint& pt, double tol) {
  require_cotangent(pt, tol);
  PhasePoint out;
  out.x = std::sqrt(eps * eps + pt.p.squaredNorm()) * pt.x;
  out.p = pt.p;
  return out;
}

PhasePoint isotopy_phi(const PerturbationField& field, double eps, const PhasePoint& pt,
                       IsotopyDirection dir) {
  PhasePoint out = pt;
  Vec4 xi = field.value(pt.x);
  out.p += (dir == IsotopyDirection::forward ? eps : -eps) * xi;
  return out;
}

double ResolvedPoint::constraint_residual() const {
  complexd d1 = line.v * w[0] - line.u * w[1];
  complexd d2 = line.v * w[2] - line.u * w[3];
  return std::max(std::abs(d1), std::abs(d2));
}

int lift_pair_choice(const CVec4& w) {
  double n1 = std::norm(w[0]) + std::norm(w[1]);
  double n2 = std::norm(w[2]) + std::norm(w[3]);
  return (n2 > n1) ? 1 : 0;
}

ResolvedPoint resolve_lift_pair(const CVec4& w, int pair, double tol) {
  if (w.norm() < 1e-10) throw std::domain_error("lift undefined at the node");
  if (std::abs(w[0] * w[3] - w[1] * w[2]) > tol * std::max(1.0, w.squaredNorm()))
    throw std::domain_error("point is not on the cone within tolerance");
  ResolvedPoint out;
  out.w = w;
  out.line = (pair == 0) ? ProjPoint::of(w[0], w[1]) : ProjPoint::of(w[2], w[3]);
  return out;
}

ResolvedPoint resolve_lift(const CVec4& w, double tol) {
  return resolve_lift_pair(w, lift_pair_choice(w), tol);
}

CVec4 cone_chart_embed(const ChartPoint& cp) {
  if (std::abs(cp.z) >= 2.0) throw std::invalid_argument("chart requires |z| < 2");
  CVec4 w;
  if (cp.chart == 1)
    w << cp.xi, cp.z * cp.xi, cp.eta, cp.z * cp.eta;
  else
    w << cp.z * cp.xi, cp.xi, cp.z * cp.eta, cp.eta;
  return w;
}

ChartPoint cone_chart_invert(const CVec4& w, double tol) {
  if (w.norm() < 1e-12) throw std::domain_error("chart inversion undefined at the node");
  if (std::abs(w[0] * w[3] - w[1] * w[2]) > tol * std::max(1.0, w.squaredNorm()))
    throw std::domain_error("point is not on the cone within tolerance");
  ChartPoint cp;
  double n1 = std::max(std::abs(w[0]), std::abs(w[2]));
  double n2 = std::max(std::abs(w[1]), std::abs(w[3]));
  if (n2 > n1) {
    // second entries lead: w = (z xi, xi, z eta, eta)
    cp.chart = 2;
    if (std::abs(w[1]) >= std::abs(w[3])) {
      cp.z = w[0] / w[1];
    } else {
      cp.z = w[2] / w[3];
    }
    cp.xi = w[1];
    cp.eta = w[3];
  } else {
    cp.chart = 1;
    if (std::abs(w[0]) >= std::abs(w[2])) {
      cp.z = w[1] / w[0];
    } else {
      cp.z = w[3] / w[2];
    }
    cp.xi = w[0];
    cp.eta = w[2];
  }
  return cp;
}

ResolvedPoint ct_point(const FrameField& field, double eps, const ConormalCoords& c) {
  if (!(eps > 0)) throw std::invalid_argument("transition requires eps > 0");
  PhasePoint contracted = contract_F(perturbed_conormal_point(field, eps, c));
  ComplexVec4 w = coords_zw(z_of(contracted), CoordSystem::W);
  return resolve_lift(w.v);
}

ResolvedPoint ct_point_pair(const FrameField& field, double eps, const ConormalCoords& c,
                            int pair) {
  if (!(eps > 0)) throw std::invalid_argument("transition requires eps > 0");
  PhasePoint contracted = contract_F(perturbed_conormal_point(field, eps, c));
  ComplexVec4 w = coords_zw(z_of(contracted), CoordSystem::W);
  return resolve_lift_pair(w.v, pair);
}

ResolvedPoint ct_unknot_oracle(double t, double theta, double r) {
  if (r < 0) throw std::invalid_argument("radius must be >= 0");
  complexd alpha = I * std::exp(I * (t + theta));
  complexd b = -I * r * std::exp(-I * theta);
  ResolvedPoint out;
  out.line = ProjPoint::of(alpha, complexd(1.0, 0.0));
  out.w << alpha * b, b, std::conj(b), std::conj(alpha * b);
  return out;
}

complexd torus_trace(int m, int n, double t, double theta) {
  if (m == n) throw std::invalid_argument("torus trace requires m != n");
  if (std::gcd(m, n) != 1) throw std::invalid_argument("torus trace requires gcd(m,n) = 1");
  double root = std::sqrt(2.0 / (m * m + n * n));
  complexd top = 1.0 - n * root * std::sin(theta) + I * std::cos(theta);
  complexd bottom = 1.0 + m * root * std::sin(theta) - I * std::cos(theta);
  return -std::exp(I * (double(m + n) * t)) * top / bottom;
}

}  // namespace conifold
