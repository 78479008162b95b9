#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conifold/coords.hpp"
#include "conifold/fd.hpp"
#include "conifold/forms.hpp"
#include "conifold/rng.hpp"

using namespace conifold;

namespace {

PhasePoint random_phase(std::mt19937_64& rng) {
  PhasePoint q;
  for (int i = 0; i < 4; ++i) {
    q.x[i] = uniform(rng, -2, 2);
    q.p[i] = uniform(rng, -2, 2);
  }
  return q;
}

Vec8 random_vec8(std::mt19937_64& rng) {
  Vec8 v;
  for (int i = 0; i < 8; ++i) v[i] = uniform(rng, -1, 1);
  return v;
}

}  // namespace

TEST_CASE("omega on dual pairs and degenerate pairs") {
  PhasePoint q;
  TangentVec u = TangentVec::at(q, Vec4::Unit(0), Vec4::Zero());
  TangentVec v = TangentVec::at(q, Vec4::Zero(), Vec4::Unit(0));
  CHECK(omega_eval(u, v) == doctest::Approx(1.0));
  CHECK(omega_eval(u, u) == doctest::Approx(0.0));
  TangentVec v2 = TangentVec::at(q, Vec4::Zero(), Vec4::Unit(1));
  CHECK(omega_eval(u, v2) == doctest::Approx(0.0));
}

TEST_CASE("omega rejects mismatched base points") {
  PhasePoint a, b;
  b.x[0] = 1.0;
  TangentVec u = TangentVec::at(a, Vec4::Unit(0), Vec4::Zero());
  TangentVec v = TangentVec::at(b, Vec4::Unit(1), Vec4::Zero());
  CHECK_THROWS_AS(omega_eval(u, v), std::invalid_argument);
}

TEST_CASE("omega antisymmetry and compatibility with the standard structure") {
  auto rng = cell_rng(2024, 0);
  for (int trial = 0; trial < 200; ++trial) {
    PhasePoint q = random_phase(rng);
    TangentVec u{q, random_vec8(rng)}, v{q, random_vec8(rng)};
    CHECK(omega_eval(u, v) == doctest::Approx(-omega_eval(v, u)).epsilon(1e-12));
    TangentVec ju = complex_J_apply(u, ComplexStructureKind::standard_z);
    CHECK(omega_eval(u, ju) == doctest::Approx(u.d.squaredNorm()).epsilon(1e-13));
  }
}

TEST_CASE("liouville evaluations") {
  PhasePoint q;
  q.p << 0, 0, 2, 0;
  TangentVec v = TangentVec::at(q, Vec4(0, 0, 1, 0), Vec4::Zero());
  CHECK(liouville_eval(v) == doctest::Approx(-2.0));

  PhasePoint zs;  // zero section
  zs.x << 1, 0, 0, 0;
  TangentVec w = TangentVec::at(zs, Vec4(0.3, -1, 2, 0.5), Vec4(1, 1, 1, 1));
  CHECK(liouville_eval(w) == doctest::Approx(0.0));
}

TEST_CASE("z to w coordinate change on pinned points") {
  ComplexVec4 z;
  z.system = CoordSystem::Z;
  z.v << complexd(1, 0), 0, 0, 0;
  ComplexVec4 w = coords_zw(z, CoordSystem::W);
  CHECK(w.system == CoordSystem::W);
  CHECK(std::abs(w.v[0] - complexd(1, 0)) < 1e-15);
  CHECK(std::abs(w.v[1]) < 1e-15);
  CHECK(std::abs(w.v[2]) < 1e-15);
  CHECK(std::abs(w.v[3] - complexd(1, 0)) < 1e-15);

  ComplexVec4 z2;
  z2.system = CoordSystem::Z;
  z2.v << complexd(1, 0), complexd(0, 1), 0, 0;
  ComplexVec4 w2 = coords_zw(z2, CoordSystem::W);
  CHECK(std::abs(w2.v[0]) < 1e-15);
  CHECK(std::abs(w2.v[3] - complexd(2, 0)) < 1e-15);
  complexd det = w2.v[0] * w2.v[3] - w2.v[1] * w2.v[2];
  complexd sum = z2.v[0] * z2.v[0] + z2.v[1] * z2.v[1];
  CHECK(std::abs(det) < 1e-15);
  CHECK(std::abs(sum) < 1e-15);

  CHECK_THROWS_AS(coords_zw(w2, CoordSystem::W), std::invalid_argument);
}

TEST_CASE("z/w round trips and the quadric correspondence") {
  auto rng = cell_rng(11, 0);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    ComplexVec4 z;
    z.system = CoordSystem::Z;
    for (int j = 0; j < 4; ++j) z.v[j] = complexd(uniform(rng, -2, 2), uniform(rng, -2, 2));
    ComplexVec4 back = coords_zw(coords_zw(z, CoordSystem::W), CoordSystem::Z);
    worst = std::max(worst, (back.v - z.v).norm());
    ComplexVec4 w = coords_zw(z, CoordSystem::W);
    complexd det = w.v[0] * w.v[3] - w.v[1] * w.v[2];
    complexd sum = z.v.array().square().sum();
    CHECK(std::abs(det - sum) < 1e-12);
  }
  CHECK(worst < 1e-14);
}

TEST_CASE("split packing agrees with the z route") {
  PhasePoint q;
  q.x << 1, 0, 0, 0;
  XiEta s = coords_xieta(q);
  CHECK(std::abs(s.xi[0] - complexd(1, 0)) < 1e-15);
  CHECK(std::abs(s.xi[1]) < 1e-15);
  CHECK(s.eta.norm() < 1e-15);

  // unknot point at t = pi/2 packs to xi = (i, 0)
  PhasePoint k;
  k.x << std::cos(M_PI / 2), std::sin(M_PI / 2), 0, 0;
  XiEta sk = coords_xieta(k);
  CHECK(std::abs(sk.xi[0] - complexd(0, 1)) < 1e-12);

  XiEta pure;
  pure.xi << complexd(1, 0), 0;
  ComplexVec4 w = w_of_xieta(pure);
  CHECK(std::abs(w.v[0] - complexd(1, 0)) < 1e-15);
  CHECK(std::abs(w.v[3] - complexd(1, 0)) < 1e-15);

  auto rng = cell_rng(12, 0);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    PhasePoint p = random_phase(rng);
    CVec4 via_z = coords_zw(z_of(p), CoordSystem::W).v;
    CVec4 via_split = w_of_xieta(coords_xieta(p)).v;
    worst = std::max(worst, (via_z - via_split).norm());
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("complex structure applications") {
  PhasePoint q;
  TangentVec u = TangentVec::at(q, Vec4::Unit(0), Vec4::Zero());
  TangentVec ju = complex_J_apply(u, ComplexStructureKind::standard_z);
  CHECK((ju.dx() - Vec4::Zero()).norm() < 1e-15);
  CHECK((ju.dp() - Vec4::Unit(0)).norm() < 1e-15);

  auto rng = cell_rng(13, 0);
  for (int i = 0; i < 50; ++i) {
    TangentVec v{q, random_vec8(rng)};
    for (auto kind : {ComplexStructureKind::standard_z, ComplexStructureKind::split_xieta}) {
      TangentVec jj = complex_J_apply(complex_J_apply(v, kind), kind);
      CHECK((jj.d + v.d).norm() < 1e-15);
    }
  }

  TangentVec e1 = TangentVec::at(q, Vec4::Unit(0), Vec4::Zero());
  TangentVec je1 = complex_J_apply(e1, ComplexStructureKind::split_xieta);
  CHECK((je1.dx() - Vec4::Unit(1)).norm() < 1e-15);
  CHECK(je1.dp().norm() < 1e-15);
}

TEST_CASE("fubini-study values in the affine chart") {
  CHECK(fubini_study_eval(0.0, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(fubini_study_eval(1.0, 1.0, 1.0) == doctest::Approx(0.25));
  CHECK(fubini_study_eval(0.0, 1.0, complexd(0, 1)) == doctest::Approx(0.0));
}

TEST_CASE("finite-difference jacobian against the analytic contraction derivative") {
  MapRn F = [](const VectorXd& q) {
    Vec4 x = q.head<4>(), p = q.tail<4>();
    VectorXd out(8);
    out << p.norm() * x, p;
    return out;
  };
  VectorXd q(8);
  q << 1, 0, 0, 0, 0, 0, 1, 0;
  MatrixXd J = jacobian_fd(F, q);
  // d(|p| x)/dp3 = x p3/|p| = (1,0,0,0)
  VectorXd col = J.col(6).head(4);
  CHECK((col - Vec4(1, 0, 0, 0)).norm() < 1e-9);

  MapRn ident = [](const VectorXd& v) { return v; };
  MatrixXd Ji = jacobian_fd(ident, q);
  CHECK((Ji - MatrixXd::Identity(8, 8)).norm() < 1e-10);
}

TEST_CASE("finite-difference second derivatives") {
  MatrixXd A(3, 3);
  A << 1, 2, 0, -1, 0.5, 3, 0, 1, -2;
  MapRn lin = [A](const VectorXd& v) { return VectorXd(A * v); };
  VectorXd x = VectorXd::Zero(3);
  auto H = hessian_fd(lin, x);
  for (const auto& h : H) CHECK(h.norm() < 1e-8);

  MapRn quad = [](const VectorXd& v) {
    VectorXd out(1);
    out << v[0] * v[0] + 3 * v[0] * v[1] - v[1] * v[2];
    return out;
  };
  auto Hq = hessian_fd(quad, x);
  CHECK((Hq[0] - Hq[0].transpose()).norm() < 1e-6);
  CHECK(Hq[0](0, 0) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(Hq[0](0, 1) == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(Hq[0](1, 2) == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("w-chart pairings scale the (x,p) pairings by two") {
  // the z -> w change is sqrt(2) times a unitary map, so the standard
  // hermitian pairing of the w chart doubles the (x,p) one
  auto rng = cell_rng(14, 0);
  for (int i = 0; i < 200; ++i) {
    Vec8 a = random_vec8(rng), b = random_vec8(rng);
    CVec4 wa = w_of_tangent(a), wb = w_of_tangent(b);
    double om_xp = a.head<4>().dot(b.tail<4>()) - b.head<4>().dot(a.tail<4>());
    CHECK(omega_w(wa, wb) == doctest::Approx(2.0 * om_xp).epsilon(1e-12));
    CHECK(metric_w(wa, wb) == doctest::Approx(2.0 * a.dot(b)).epsilon(1e-12));
    Vec8 back = tangent_of_w(wa);
    CHECK((back - a).norm() < 1e-14);
  }
}

TEST_CASE("projective point canonicalization is unique") {
  auto rng = cell_rng(15, 0);
  for (int i = 0; i < 100; ++i) {
    complexd u(uniform(rng, -1, 1), uniform(rng, -1, 1));
    complexd v(uniform(rng, -1, 1), uniform(rng, -1, 1));
    if (std::abs(u) < 0.1) continue;
    complexd scale = complexd(uniform(rng, 0.1, 3), uniform(rng, -2, 2));
    ProjPoint a = ProjPoint::of(u, v);
    ProjPoint b = ProjPoint::of(scale * u, scale * v);
    CHECK(a.close_to(b, 1e-12));
    CHECK(std::abs(std::norm(a.u) + std::norm(a.v) - 1.0) < 1e-12);
    CHECK(a.u.imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(a.u.real() >= 0.0);
  }
  CHECK_THROWS_AS(ProjPoint::of(0.0, 0.0), std::invalid_argument);
}

TEST_CASE("resolved-chart form and metric are compatible with the product structure") {
  auto rng = cell_rng(16, 0);
  FormHandle omega = make_omega_resolved();
  MetricHandle g = make_metric_resolved();
  ComplexStructureHandle J = make_J_resolved();
  for (int i = 0; i < 100; ++i) {
    VectorXd base(10), u(10);
    for (int k = 0; k < 10; ++k) {
      base[k] = uniform(rng, -1, 1);
      u[k] = uniform(rng, -1, 1);
    }
    CHECK(omega.eval(base, u, J.apply(base, u)) ==
          doctest::Approx(g.eval(base, u, u)).epsilon(1e-12));
  }
}
