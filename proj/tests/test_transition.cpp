#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conifold/rng.hpp"
#include "conifold/sampler.hpp"
#include "conifold/suites.hpp"
#include "conifold/transition.hpp"

using namespace conifold;

namespace {

PhasePoint random_cotangent_point(std::mt19937_64& rng) {
  PhasePoint q;
  for (int i = 0; i < 4; ++i) q.x[i] = uniform(rng, -1, 1);
  q.x.normalize();
  for (int i = 0; i < 4; ++i) q.p[i] = uniform(rng, -2, 2);
  q.p -= q.x * q.x.dot(q.p);
  return q;
}

}  // namespace

TEST_CASE("contraction onto the cone") {
  PhasePoint q;
  q.x << 1, 0, 0, 0;
  q.p << 0, 0, 2, 0;
  PhasePoint c = contract_F(q);
  CHECK((c.x - Vec4(2, 0, 0, 0)).norm() < 1e-15);
  CHECK((c.p - Vec4(0, 0, 2, 0)).norm() < 1e-15);
  CVec4 z = z_of(c).v;
  CHECK(std::abs(z.array().square().sum()) < 1e-12);

  PhasePoint zs;
  zs.x << 0, 1, 0, 0;
  PhasePoint cz = contract_F(zs);
  CHECK(cz.x.norm() < 1e-15);
  CHECK(cz.p.norm() < 1e-15);

  auto rng = cell_rng(41, 0);
  for (int i = 0; i < 1000; ++i) {
    PhasePoint r = contract_F(random_cotangent_point(rng));
    CHECK(r.on_cone(1e-10));
  }

  PhasePoint off;
  off.x << 1.5, 0, 0, 0;
  CHECK_THROWS_AS(contract_F(off), std::domain_error);
}

TEST_CASE("contraction onto the smooth quadric") {
  PhasePoint q;
  q.x << 0, 1, 0, 0;
  PhasePoint c = contract_Fa(1.0, q);
  CHECK((c.x - q.x).norm() < 1e-15);

  PhasePoint q2;
  q2.x << 1, 0, 0, 0;
  q2.p << 0, 0, 1, 0;
  PhasePoint c2 = contract_Fa(2.0, q2);
  CHECK((c2.x - Vec4(std::sqrt(5.0), 0, 0, 0)).norm() < 1e-12);
  CHECK(c2.on_deformed_cone(2.0, 1e-9));

  CHECK_THROWS_AS(contract_Fa(0.0, q2), std::invalid_argument);

  // the normalized pullback approaches the flat form as a grows
  auto rng = cell_rng(42, 0);
  auto deviation = [&](double a) {
    auto rng2 = cell_rng(42, 1);
    double worst = 0;
    for (int i = 0; i < 60; ++i) {
      PhasePoint q3 = random_cotangent_point(rng2);
      Vec4 dx1, dp1, dx2, dp2;
      for (int k = 0; k < 4; ++k) {
        dx1[k] = uniform(rng2, -1, 1);
        dp1[k] = uniform(rng2, -1, 1);
        dx2[k] = uniform(rng2, -1, 1);
        dp2[k] = uniform(rng2, -1, 1);
      }
      dx1 -= q3.x * q3.x.dot(dx1);
      dp1 -= q3.x * (q3.x.dot(dp1) + q3.p.dot(dx1));
      dx2 -= q3.x * q3.x.dot(dx2);
      dp2 -= q3.x * (q3.x.dot(dp2) + q3.p.dot(dx2));
      double s = std::sqrt(a * a + q3.p.squaredNorm());
      auto push = [&](const Vec4& dx, const Vec4& dp) {
        TangentVec t;
        t.base = contract_Fa(a, q3);
        Vec4 mx = s * dx + q3.x * (q3.p.dot(dp)) / s;
        t.d << mx, dp;
        return t;
      };
      TangentVec u = push(dx1, dp1), v = push(dx2, dp2);
      TangentVec u0 = TangentVec::at(q3, dx1, dp1), v0 = TangentVec::at(q3, dx2, dp2);
      worst = std::max(worst,
                       std::abs(omega_eval(u, v) / a - omega_eval(u0, v0)));
    }
    return worst;
  };
  (void)rng;
  CHECK(deviation(1000.0) < 1e-2 * deviation(10.0));
}

TEST_CASE("regularized contraction reduces to the plain one at eps = 0") {
  auto rng = cell_rng(43, 0);
  for (int i = 0; i < 100; ++i) {
    PhasePoint q = random_cotangent_point(rng);
    PhasePoint a = contract_Feps(0.0, q);
    PhasePoint b = contract_F(q);
    CHECK((a.flat() - b.flat()).norm() < 1e-14);
  }
}

TEST_CASE("lift of nonzero cone points") {
  CVec4 w;
  w << complexd(1, 0), complexd(0, -1), complexd(0, 1), complexd(1, 0);
  ResolvedPoint rp = resolve_lift(w);
  CHECK(rp.constraint_residual() < 1e-10);
  ProjPoint expect = ProjPoint::of(complexd(0, 1), complexd(1, 0));
  CHECK(rp.line.close_to(expect, 1e-12));

  CVec4 w2;
  w2 << 0, 0, 0, complexd(2, 0);
  ResolvedPoint rp2 = resolve_lift(w2);
  CHECK(rp2.line.close_to(ProjPoint::of(0.0, 1.0), 1e-12));

  CVec4 zero = CVec4::Zero();
  CHECK_THROWS_AS(resolve_lift(zero), std::domain_error);

  CVec4 off;
  off << 1.0, 1.0, 1.0, 2.0;
  CHECK_THROWS_AS(resolve_lift(off), std::domain_error);

  // projection after the lift returns the w point
  auto rng = cell_rng(44, 0);
  for (int i = 0; i < 200; ++i) {
    ChartPoint cp;
    cp.chart = 1;
    cp.z = complexd(uniform(rng, -0.9, 0.9), uniform(rng, -0.9, 0.9));
    cp.xi = complexd(uniform(rng, -1, 1), uniform(rng, -1, 1));
    cp.eta = complexd(uniform(rng, -1, 1), uniform(rng, -1, 1));
    CVec4 wc = cone_chart_embed(cp);
    if (wc.norm() < 1e-3) continue;
    ResolvedPoint lifted = resolve_lift(wc);
    CHECK((lifted.w - wc).norm() < 1e-15);
    CHECK(lifted.constraint_residual() < 1e-10);
  }
}

TEST_CASE("cone chart inversion follows the dominant pair") {
  CVec4 w1;
  w1 << 1.0, 0.5, 2.0, 1.0;
  ChartPoint c1 = cone_chart_invert(w1);
  CHECK(c1.chart == 1);
  CHECK(std::abs(c1.z - complexd(0.5, 0)) < 1e-12);
  CHECK(std::abs(c1.xi - complexd(1, 0)) < 1e-12);
  CHECK(std::abs(c1.eta - complexd(2, 0)) < 1e-12);

  CVec4 w2;
  w2 << 0.5, 1.0, 1.0, 2.0;
  ChartPoint c2 = cone_chart_invert(w2);
  CHECK(c2.chart == 2);
  CHECK(std::abs(c2.z - complexd(0.5, 0)) < 1e-12);

  ChartPoint embed_me;
  embed_me.chart = 1;
  embed_me.z = 0.0;
  embed_me.xi = 1.0;
  embed_me.eta = 0.0;
  CVec4 we = cone_chart_embed(embed_me);
  CVec4 e1;
  e1 << 1.0, 0.0, 0.0, 0.0;
  CHECK((we - e1).norm() < 1e-15);

  CHECK_THROWS_AS(cone_chart_invert(CVec4::Zero()), std::domain_error);

  // embed then invert round trips; images satisfy the determinant relation
  auto rng = cell_rng(45, 0);
  for (int i = 0; i < 300; ++i) {
    CVec4 w;
    ChartPoint cp;
    cp.chart = (i % 2) ? 1 : 2;
    cp.z = complexd(uniform(rng, -1.2, 1.2), uniform(rng, -1.2, 1.2));
    cp.xi = complexd(uniform(rng, -1, 1), uniform(rng, -1, 1));
    cp.eta = complexd(uniform(rng, -1, 1), uniform(rng, -1, 1));
    if (std::abs(cp.xi) + std::abs(cp.eta) < 1e-2) continue;
    w = cone_chart_embed(cp);
    CHECK(std::abs(w[0] * w[3] - w[1] * w[2]) < 1e-14);
    if (w.norm() < 1e-3) continue;
    ChartPoint back = cone_chart_invert(w);
    CVec4 again = cone_chart_embed(back);
    CHECK((again - w).norm() < 1e-12);
  }
}

TEST_CASE("transited points stay away from the node") {
  auto field = make_frame_field(unknot());
  double eps = 0.25;
  auto rng = cell_rng(46, 0);
  double min_w = 1e9;
  for (int i = 0; i < 10000; ++i) {
    ConormalCoords c = ConormalCoords::polar(uniform(rng, 0, 2 * M_PI),
                                             uniform(rng, 0, 2 * M_PI),
                                             uniform(rng, 0.01, 2.0));
    ResolvedPoint rp = ct_point(*field, eps, c);
    CHECK(rp.constraint_residual() < 1e-10);
    min_w = std::min(min_w, rp.w.norm());
  }
  CHECK(min_w >= 2 * eps - 1e-9);

  CHECK_THROWS_AS(ct_point(*field, 0.0, ConormalCoords::polar(0, 0, 1)),
                  std::invalid_argument);
}

TEST_CASE("closed-form transited unknot") {
  ResolvedPoint rp = ct_unknot_oracle(0.0, 0.0, 1.0);
  CHECK(rp.line.close_to(ProjPoint::of(complexd(0, 1), 1.0), 1e-12));
  CVec4 expect;
  expect << complexd(1, 0), complexd(0, -1), complexd(0, 1), complexd(1, 0);
  CHECK((rp.w - expect).norm() < 1e-12);

  ResolvedPoint tip = ct_unknot_oracle(0.0, 0.0, 0.0);
  CHECK(tip.w.norm() < 1e-15);
  CHECK(tip.line.close_to(ProjPoint::of(complexd(0, 1), 1.0), 1e-12));

  // the line stays on the equator
  auto rng = cell_rng(47, 0);
  for (int i = 0; i < 200; ++i) {
    ResolvedPoint q = ct_unknot_oracle(uniform(rng, 0, 2 * M_PI), uniform(rng, 0, 2 * M_PI),
                                       uniform(rng, 0, 2));
    CHECK(std::abs(std::abs(q.trace()) - 1.0) < 1e-12);
    CHECK(q.constraint_residual() < 1e-12);
  }
}

TEST_CASE("pipeline approaches the closed form as the perturbation shrinks") {
  auto field = make_frame_field(unknot());
  auto deviation = [&](double eps) {
    double worst = 0;
    for (int it = 0; it < 16; ++it)
      for (int ith = 0; ith < 16; ++ith) {
        double t = 2 * M_PI * it / 16, th = 2 * M_PI * ith / 16;
        ResolvedPoint a = ct_point(*field, eps, ConormalCoords::polar(t, th, 1.0));
        ResolvedPoint b = ct_unknot_oracle(t, th, 1.0);
        double dw = (a.w - b.w).norm();
        double dl = std::abs(a.line.u - b.line.u) + std::abs(a.line.v - b.line.v);
        worst = std::max(worst, dw + dl);
      }
    return worst;
  };
  double d2 = deviation(1e-2), d3 = deviation(1e-3);
  CHECK(d2 < 0.05);
  CHECK(d3 < 0.15 * d2);  // first order in eps
}

TEST_CASE("collapsed-edge trace of torus knots") {
  CHECK(std::abs(std::abs(torus_trace(2, 3, 0.7, 0.0)) - 1.0) < 1e-12);
  CHECK(std::abs(torus_trace(2, 3, 0.0, M_PI / 2)) ==
        doctest::Approx(0.0990253).epsilon(1e-4));
  TraceRange env = torus_trace_envelope(2, 3);
  CHECK(env.lo < 1.0);
  CHECK(env.hi > 1.0);
  CHECK_THROWS_AS(torus_trace(2, 2, 0, 0), std::invalid_argument);
}

TEST_CASE("transited torus knot trace spans an annulus containing the equator") {
  auto field = make_frame_field(torus_knot(2, 3));
  GridSpec g;
  g.axes = {GridAxis{0, 2 * M_PI, 24, true}, GridAxis{0, 2 * M_PI, 24, true},
            GridAxis{0.1, 2.0, 6, false}};
  TraceRange r = ct_trace_range(*field, 0.1, g);
  CHECK(r.lo < 1.0 - 1e-3);
  CHECK(r.hi > 1.0 + 1e-3);
  // the closed-form sweep of the collapsed edge envelopes the sampled annulus
  TraceRange env = torus_trace_envelope(2, 3);
  CHECK(r.lo >= env.lo - 1e-9);
  CHECK(r.hi <= env.hi + 1e-9);
}

TEST_CASE("unknot trace modulus approaches the equator at first order") {
  auto field = make_frame_field(unknot());
  GridSpec g;
  g.axes = {GridAxis{0, 2 * M_PI, 16, true}, GridAxis{0, 2 * M_PI, 16, true},
            GridAxis{0.25, 2.0, 4, false}};
  double dev1 = unknot_trace_deviation(*field, 1e-3, g);
  double dev2 = unknot_trace_deviation(*field, 5e-4, g);
  CHECK(dev1 < 1e-2);
  CHECK(std::abs(dev2 / dev1 - 0.5) < 0.05);
}
