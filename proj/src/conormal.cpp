#include "conifold/conormal.hpp"

#include <cmath>

#include "conifold/rng.hpp"

namespace conifold {

PhasePoint conormal_point(const FrameField& field, const ConormalCoords& c) {
  Frame f = field.at(c.t);
  PhasePoint q;
  q.x = f.k;
  q.p = c.alpha * f.p1 + c.beta * f.p2;
  return q;
}

PhasePoint perturbed_conormal_point(const FrameField& field, double eps,
                                    const ConormalCoords& c) {
  if (eps < 0) throw std::invalid_argument("perturbation size must be >= 0");
  Frame f = field.at(c.t);
  PhasePoint q;
  q.x = f.k;
  q.p = c.alpha * f.p1 + c.beta * f.p2 + eps * f.tau;
  return q;
}

std::array<TangentVec, 3> conormal_tangent_basis(const FrameField& field, double eps,
                                                 const ConormalCoords& c) {
  KnotCurve::Jet j = field.knot().eval(c.t);
  NormalFrameJet nf = field.normal_jet(c.t);
  Frame f = field.at(c.t);
  PhasePoint base = perturbed_conormal_point(field, eps, c);

  double v = j.dk.norm();
  Vec4 dtau = (j.ddk - f.tau * f.tau.dot(j.ddk)) / v;

  std::array<TangentVec, 3> basis;
  basis[0] = TangentVec::at(base, j.dk, c.alpha * nf.dp1 + c.beta * nf.dp2 + eps * dtau);
  basis[1] = TangentVec::at(base, Vec4::Zero(), f.p1);
  basis[2] = TangentVec::at(base, Vec4::Zero(), f.p2);
  return basis;
}

namespace {

// C^1 profile: 1 on s <= 0, 0 on s >= 1, cubic in between (max slope 3/2).
double smoothstep_down(double s) {
  if (s <= 0) return 1.0;
  if (s >= 1) return 0.0;
  double u = 1.0 - s;
  return u * u * (3.0 - 2.0 * u);
}

}  // namespace

PerturbationField::PerturbationField(KnotCurve knot, PerturbationFieldConfig cfg)
    : knot_(std::move(knot)), frames_(knot_), cfg_(cfg) {
  if (cfg_.tube_radius <= 0) cfg_.tube_radius = 0.5 * knot_.sampled_self_distance();
  if (!(cfg_.plateau_lo > 0 && cfg_.plateau_hi > cfg_.plateau_lo))
    throw std::invalid_argument("radial plateau must satisfy 0 < lo < hi");
  const int n = 1024;
  coarse_.resize(n);
  for (int i = 0; i < n; ++i) coarse_[static_cast<size_t>(i)] = knot_.point(2.0 * M_PI * i / n);
}

PerturbationField::Projection PerturbationField::project(const Vec4& u) const {
  const int n = static_cast<int>(coarse_.size());
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    double d = (u - coarse_[static_cast<size_t>(i)]).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  double t = 2.0 * M_PI * best / n;
  // Newton on the squared chordal distance
  for (int it = 0; it < 40; ++it) {
    KnotCurve::Jet j = knot_.eval(t);
    double g = -2.0 * (u - j.k).dot(j.dk);
    double h = -2.0 * (u - j.k).dot(j.ddk) + 2.0 * j.dk.squaredNorm();
    if (std::abs(h) < 1e-9) break;
    double step = g / h;
    t -= step;
    if (std::abs(step) < 1e-14) break;
  }
  Projection pr;
  pr.t = wrap_angle(t);
  double c = std::clamp(u.dot(knot_.point(pr.t)), -1.0, 1.0);
  pr.angular_distance = std::acos(c);
  return pr;
}

Vec4 PerturbationField::value(const Vec4& x) const {
  double s = x.norm();
  const double lo = cfg_.plateau_lo, hi = cfg_.plateau_hi;
  if (s <= 0.5 * lo || s >= 1.5 * hi) return Vec4::Zero();
  double chi = 1.0;
  if (s < lo) chi = smoothstep_down((lo - s) / (0.5 * lo));
  if (s > hi) chi = smoothstep_down((s - hi) / (0.5 * hi));
  if (chi == 0.0) return Vec4::Zero();

  Vec4 u = x / s;
  Projection pr = project(u);
  if (pr.angular_distance >= cfg_.tube_radius) return Vec4::Zero();
  double psi = smoothstep_down(pr.angular_distance / cfg_.tube_radius);
  KnotCurve::Jet j = knot_.eval(pr.t);
  return chi * psi * (j.dk / j.dk.norm());
}

Mat4 PerturbationField::jacobian(const Vec4& x) const {
  const double h = 1e-6 * std::max(1.0, x.norm());
  Mat4 J;
  for (int i = 0; i < 4; ++i) {
    Vec4 xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    J.col(i) = (value(xp) - value(xm)) / (2 * h);
  }
  return J;
}

PerturbationField::NormMeasurement PerturbationField::measure_jacobian_norm(
    double shell_lo, double shell_hi, std::uint64_t seed, int t_samples, int d_samples,
    int s_samples) const {
  NormMeasurement m;
  m.shell_lo = shell_lo;
  m.shell_hi = shell_hi;
  double best = 0.0;
  for (int it = 0; it < t_samples; ++it) {
    double t = 2.0 * M_PI * it / t_samples;
    Frame f = frames_.at(t);
    auto rng = cell_rng(seed, static_cast<std::uint64_t>(it));
    for (int id = 0; id < d_samples; ++id) {
      double d = cfg_.tube_radius * (id + 0.5) / d_samples;
      // normal direction within the sphere at k(t): mix of tau, p1, p2
      Eigen::Vector3d w(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
      if (w.norm() < 1e-6) w << 1, 0, 0;
      w.normalize();
      Vec4 n = w[0] * f.tau + w[1] * f.p1 + w[2] * f.p2;
      Vec4 u = std::cos(d) * f.k + std::sin(d) * n;
      for (int is = 0; is < s_samples; ++is) {
        double s = shell_lo + (shell_hi - shell_lo) * (is + 0.5) / s_samples;
        Mat4 J = jacobian(s * u);
        double nrm = J.jacobiSvd().singularValues()[0];
        best = std::max(best, nrm);
        ++m.samples;
      }
    }
  }
  m.sigma = best;
  return m;
}

}  // namespace conifold
