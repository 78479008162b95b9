#include "conifold/frame.hpp"

#include <cmath>

namespace conifold {

Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
  Vec4 d;
  Eigen::Matrix3d m;
  for (int i = 0; i < 4; ++i) {
    int col = 0;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      m(0, col) = a[j];
      m(1, col) = b[j];
      m(2, col) = c[j];
      ++col;
    }
    d[i] = ((i % 2) ? -1.0 : 1.0) * m.determinant();
  }
  return d;
}

namespace {

Vec4 unit_tangent(const KnotCurve::Jet& j) {
  double v = j.dk.norm();
  if (v < 1e-12) throw std::domain_error("degenerate velocity: curve not immersed here");
  return j.dk / v;
}

Vec4 project_normal(const KnotCurve::Jet& j, const Vec4& tau, const Vec4& s) {
  Vec4 r = s - j.k * j.k.dot(s) - tau * tau.dot(s);
  double n = r.norm();
  if (n < 1e-10) throw std::domain_error("frame seed degenerated onto span{k, tau}");
  return r / n;
}

}  // namespace

FrameField::FrameField(KnotCurve knot, int table_size)
    : knot_(std::move(knot)), analytic_(knot_.has_analytic_frame()), table_size_(table_size) {
  if (analytic_) return;

  table_.resize(static_cast<size_t>(table_size_));
  const double step = 2.0 * M_PI / table_size_;

  KnotCurve::Jet j0 = knot_.eval(0.0);
  Vec4 tau0 = unit_tangent(j0);
  // seed with the coordinate axis least aligned with span{k, tau}
  int best_axis = 0;
  double best_res = -1.0;
  for (int a = 0; a < 4; ++a) {
    Vec4 e = Vec4::Unit(a);
    double res = (e - j0.k * j0.k[a] - tau0 * tau0[a]).norm();
    if (res > best_res) {
      best_res = res;
      best_axis = a;
    }
  }
  table_[0] = project_normal(j0, tau0, Vec4::Unit(best_axis));
  for (int i = 1; i < table_size_; ++i) {
    KnotCurve::Jet j = knot_.eval(step * i);
    table_[static_cast<size_t>(i)] =
        project_normal(j, unit_tangent(j), table_[static_cast<size_t>(i - 1)]);
  }
  // residual holonomy of the transported frame over one period
  Vec4 back = project_normal(j0, tau0, table_[static_cast<size_t>(table_size_ - 1)]);
  Vec4 p2_0 = cross4(j0.k, tau0, table_[0]);
  holonomy_ = std::atan2(back.dot(p2_0), back.dot(table_[0]));
}

const Vec4& FrameField::seed_for(double t) const {
  double w = wrap_angle(t);
  int idx = static_cast<int>(w / (2.0 * M_PI) * table_size_);
  if (idx >= table_size_) idx = table_size_ - 1;
  return table_[static_cast<size_t>(idx)];
}

Frame FrameField::frame_from_seed(double t, const Vec4& seed) const {
  KnotCurve::Jet j = knot_.eval(t);
  Frame f;
  f.k = j.k;
  f.tau = unit_tangent(j);
  Vec4 p1 = project_normal(j, f.tau, seed);
  Vec4 p2 = cross4(f.k, f.tau, p1);
  // unwind the holonomy so the frame is periodic; t enters unwrapped here
  double psi = -holonomy_ * wrap_angle(t) / (2.0 * M_PI);
  f.p1 = std::cos(psi) * p1 + std::sin(psi) * p2;
  f.p2 = -std::sin(psi) * p1 + std::cos(psi) * p2;
  return f;
}

Frame FrameField::at(double t) const {
  KnotCurve::Jet j = knot_.eval(t);
  Frame f;
  if (analytic_) {
    NormalFrameJet nf = knot_.analytic_frame(t);
    f.k = j.k;
    f.tau = unit_tangent(j);
    f.p1 = nf.p1;
    f.p2 = nf.p2;
    return f;
  }
  return frame_from_seed(wrap_angle(t), seed_for(t));
}

NormalFrameJet FrameField::normal_jet(double t) const {
  if (analytic_) return knot_.analytic_frame(t);

  const Vec4 seed = seed_for(t);
  const double tw = wrap_angle(t);
  // derivative of the local branch: same seed across the whole stencil, and
  // the unwinding angle follows the unwrapped parameter
  auto local = [this, &seed, tw](double s) {
    KnotCurve::Jet j = knot_.eval(s);
    Vec4 tau = unit_tangent(j);
    Vec4 p1 = project_normal(j, tau, seed);
    Vec4 p2 = cross4(j.k, tau, p1);
    double psi = -holonomy_ * s / (2.0 * M_PI);
    NormalFrameJet out;
    out.p1 = std::cos(psi) * p1 + std::sin(psi) * p2;
    out.p2 = -std::sin(psi) * p1 + std::cos(psi) * p2;
    out.dp1.setZero();
    out.dp2.setZero();
    return out;
  };

  NormalFrameJet f = local(tw);
  const double h = 1e-3;
  auto stencil = [&](auto member) {
    Vec4 d = (8.0 * (local(tw + h).*member - local(tw - h).*member) -
              (local(tw + 2 * h).*member - local(tw - 2 * h).*member)) /
             (12.0 * h);
    return d;
  };
  f.dp1 = stencil(&NormalFrameJet::p1);
  f.dp2 = stencil(&NormalFrameJet::p2);
  return f;
}

Frame frame_at(const FrameField& field, double t) { return field.at(t); }

}  // namespace conifold
