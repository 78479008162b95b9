#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conifold/rng.hpp"
#include "conifold/sampler.hpp"
#include "conifold/verify.hpp"

using namespace conifold;

namespace {

GridSpec sphere_grid() {
  GridSpec g;
  g.axes = {GridAxis{0.6, M_PI - 0.6, 3, false}, GridAxis{0.6, M_PI - 0.6, 3, false},
            GridAxis{0, 2 * M_PI, 4, true}};
  return g;
}

}  // namespace

TEST_CASE("second fundamental form of the unit 3-sphere") {
  SubmanifoldSampler s = sphere3_sampler(1.0, sphere_grid());
  auto rng = cell_rng(61, 0);
  for (int i = 0; i < 20; ++i) {
    VectorXd u(3);
    u << uniform(rng, 0.7, M_PI - 0.7), uniform(rng, 0.7, M_PI - 0.7),
        uniform(rng, 0, 2 * M_PI);
    MatrixXd B = s.tangent_basis(u);
    VectorXd X = B.col(0) / B.col(0).norm();
    VectorXd ii = second_fundamental_form(s, u, X, X);
    VectorXd x = s.map(u);
    CHECK((ii + x).norm() < 1e-6);
    // orthogonal to the tangent space
    for (int c = 0; c < B.cols(); ++c)
      CHECK(std::abs(ii.dot(B.col(c))) / B.col(c).norm() < 1e-7);
  }
}

TEST_CASE("second fundamental form of an affine subspace vanishes") {
  SubmanifoldSampler plane;
  plane.param_dim = 2;
  plane.ambient_dim = 4;
  plane.grid.axes = {GridAxis{-1, 1, 3, false}, GridAxis{-1, 1, 3, false}};
  plane.map = [](const VectorXd& u) {
    VectorXd out(4);
    out << u[0] + 2 * u[1], u[1], 3 * u[0] - 1, 0.5;
    return out;
  };
  VectorXd u0(2);
  u0 << 0.2, -0.4;
  MatrixXd B = plane.tangent_basis(u0);
  VectorXd ii = second_fundamental_form(plane, u0, B.col(0), B.col(1));
  CHECK(ii.norm() < 1e-8);
}

TEST_CASE("non-tangent arguments are rejected") {
  SubmanifoldSampler s = sphere3_sampler(1.0, sphere_grid());
  VectorXd u(3);
  u << 1.0, 1.2, 0.3;
  VectorXd normal = s.map(u);  // radial: never tangent
  CHECK_THROWS_AS(second_fundamental_form(s, u, normal, normal), std::invalid_argument);
}

TEST_CASE("sectional curvature fixtures") {
  auto rng = cell_rng(62, 0);
  auto sample_sec = [&](const SubmanifoldSampler& s, const VectorXd& u) {
    MatrixXd B = s.tangent_basis(u);
    std::normal_distribution<double> gauss(0, 1);
    VectorXd a(B.cols()), b(B.cols());
    for (int k = 0; k < B.cols(); ++k) {
      a[k] = gauss(rng);
      b[k] = gauss(rng);
    }
    return gauss_sectional(s, u, B * a, B * b);
  };

  SubmanifoldSampler s1 = sphere3_sampler(1.0, sphere_grid());
  SubmanifoldSampler s2 = sphere3_sampler(2.0, sphere_grid());
  for (int i = 0; i < 12; ++i) {
    VectorXd u(3);
    u << uniform(rng, 0.7, M_PI - 0.7), uniform(rng, 0.7, M_PI - 0.7),
        uniform(rng, 0, 2 * M_PI);
    CHECK(sample_sec(s1, u) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(sample_sec(s2, u) == doctest::Approx(0.25).epsilon(1e-4));
  }

  GridSpec cg;
  cg.axes = {GridAxis{0, 2 * M_PI, 4, true}, GridAxis{0, 2 * M_PI, 4, true}};
  SubmanifoldSampler cliff = clifford_sampler(cg);
  for (int i = 0; i < 12; ++i) {
    VectorXd u(2);
    u << uniform(rng, 0, 2 * M_PI), uniform(rng, 0, 2 * M_PI);
    MatrixXd B = cliff.tangent_basis(u);
    double sec = gauss_sectional(cliff, u, B.col(0), B.col(1));
    CHECK(std::abs(sec) < 1e-4);
  }
}

TEST_CASE("gauss route agrees with the induced-metric riemann route") {
  SubmanifoldSampler s = sphere3_sampler(1.0, sphere_grid());
  auto rng = cell_rng(63, 0);
  for (int i = 0; i < 6; ++i) {
    VectorXd u(3);
    u << uniform(rng, 0.8, M_PI - 0.8), uniform(rng, 0.8, M_PI - 0.8),
        uniform(rng, 0, 2 * M_PI);
    VectorXd xp(3), yp(3);
    std::normal_distribution<double> gauss(0, 1);
    for (int k = 0; k < 3; ++k) {
      xp[k] = gauss(rng);
      yp[k] = gauss(rng);
    }
    MatrixXd B = s.tangent_basis(u);
    double g1 = gauss_sectional(s, u, B * xp, B * yp);
    double g2 = induced_riemann_sectional(s, u, xp, yp);
    CHECK(g1 == doctest::Approx(g2).epsilon(2e-3));
  }
}

TEST_CASE("degenerate planes are rejected") {
  SubmanifoldSampler s = sphere3_sampler(1.0, sphere_grid());
  VectorXd u(3);
  u << 1.0, 1.0, 1.0;
  MatrixXd B = s.tangent_basis(u);
  CHECK_THROWS_AS(gauss_sectional(s, u, B.col(0), 2.0 * B.col(0)), std::invalid_argument);
}

TEST_CASE("covariant hessians of linear and chart maps") {
  MapHandle lin;
  lin.src_dim = 3;
  lin.tgt_dim = 2;
  MatrixXd A(2, 3);
  A << 1, -2, 0.5, 0, 3, 1;
  lin.apply = [A](const VectorXd& u) { return VectorXd(A * u); };
  ChristoffelHandle flat3 = christoffel_zero(3), flat2 = christoffel_zero(2);
  VectorXd pt(3), X(3), Y(3);
  pt << 0.2, -0.1, 0.4;
  X << 1, 0.5, -1;
  Y << 0, 2, 1;
  CHECK(covariant_hessian(lin, flat3, flat2, pt, X, Y).norm() < 1e-8);

  // plain hessian entries of the chart embedding are constant in the chart
  MapHandle chart = make_cone_chart_map(1);
  ChristoffelHandle flat6 = christoffel_zero(6), flat8 = christoffel_zero(8);
  auto rng = cell_rng(64, 0);
  VectorXd X6(6), Y6(6);
  for (int k = 0; k < 6; ++k) {
    X6[k] = uniform(rng, -1, 1);
    Y6[k] = uniform(rng, -1, 1);
  }
  VectorXd h0;
  for (int i = 0; i < 5; ++i) {
    VectorXd q(6);
    for (int k = 0; k < 6; ++k) q[k] = uniform(rng, -1, 1);
    VectorXd h = covariant_hessian(chart, flat6, flat8, q, X6, Y6);
    if (i == 0)
      h0 = h;
    else
      CHECK((h - h0).norm() < 1e-6);
  }
}

TEST_CASE("christoffel symbols from a coordinate metric") {
  // round metric on the 2-sphere in angle coordinates has known symbols
  MetricHandle sphere_metric;
  sphere_metric.dim = 2;
  sphere_metric.eval = [](const VectorXd& base, const VectorXd& u, const VectorXd& v) {
    double st = std::sin(base[0]);
    return u[0] * v[0] + st * st * u[1] * v[1];
  };
  ChristoffelHandle gamma = christoffel_of_metric(sphere_metric);
  VectorXd base(2);
  base << 0.9, 0.3;
  VectorXd e0 = VectorXd::Unit(2, 0), e1 = VectorXd::Unit(2, 1);
  // Gamma^theta_{phi phi} = -sin cos, Gamma^phi_{theta phi} = cot
  VectorXd gpp = gamma.eval(base, e1, e1);
  CHECK(gpp[0] == doctest::Approx(-std::sin(0.9) * std::cos(0.9)).epsilon(1e-6));
  VectorXd gtp = gamma.eval(base, e0, e1);
  CHECK(gtp[1] == doctest::Approx(std::cos(0.9) / std::sin(0.9)).epsilon(1e-6));
}

TEST_CASE("fubini-study block christoffel matches the conformal closed form") {
  ChristoffelHandle fs = christoffel_fs_block(10);
  MetricHandle fs2 = make_fs_metric();
  ChristoffelHandle fd_gamma = christoffel_of_metric(fs2);
  auto rng = cell_rng(65, 0);
  for (int i = 0; i < 20; ++i) {
    VectorXd base2(2), X2(2), Y2(2);
    for (int k = 0; k < 2; ++k) {
      base2[k] = uniform(rng, -0.8, 0.8);
      X2[k] = uniform(rng, -1, 1);
      Y2[k] = uniform(rng, -1, 1);
    }
    VectorXd base10 = VectorXd::Zero(10), X10 = VectorXd::Zero(10),
             Y10 = VectorXd::Zero(10);
    base10.head(2) = base2;
    X10.head(2) = X2;
    Y10.head(2) = Y2;
    VectorXd a = fs.eval(base10, X10, Y10);
    VectorXd b = fd_gamma.eval(base2, X2, Y2);
    CHECK((a.head(2) - b).norm() < 1e-5);
    CHECK(a.tail(8).norm() < 1e-12);
  }
}

TEST_CASE("sectional curvature of the product ambient") {
  VectorXd base = VectorXd::Zero(10);
  VectorXd X = VectorXd::Unit(10, 0), Y = VectorXd::Unit(10, 1);
  CHECK(sectional_product_cp1_c4(base, X, Y) == doctest::Approx(4.0).epsilon(1e-12));
  VectorXd Xf = VectorXd::Unit(10, 2), Yf = VectorXd::Unit(10, 4);
  CHECK(sectional_product_cp1_c4(base, Xf, Yf) == doctest::Approx(0.0).epsilon(1e-12));
  // mixed planes carry curvature scaled by the projective components
  CHECK(sectional_product_cp1_c4(base, X, Yf) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("cone second fundamental form decays along the dilation") {
  SubmanifoldSampler cone = cone_embed_sampler(GridSpec{});
  auto at_scale = [&](double delta) {
    auto rng = cell_rng(66, static_cast<std::uint64_t>(delta * 10));
    double m = 0;
    for (int i = 0; i < 8; ++i) {
      complexd z(uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5));
      double rho = delta / std::sqrt(1 + std::norm(z));
      double a = uniform(rng, 0.5, M_PI - 0.5), b = uniform(rng, 0.5, M_PI - 0.5),
             c = uniform(rng, 0, 2 * M_PI);
      complexd xi = rho * complexd(std::cos(a), std::sin(a) * std::cos(b));
      complexd eta = rho * std::sin(a) * std::sin(b) * complexd(std::cos(c), std::sin(c));
      VectorXd u(6);
      u << z.real(), z.imag(), xi.real(), xi.imag(), eta.real(), eta.imag();
      m = std::max(m, ii_norm_estimate(cone, u, 12, 5));
    }
    return m;
  };
  double m1 = at_scale(1.0), m2 = at_scale(2.0), m4 = at_scale(4.0);
  CHECK(m2 < m1 + 1e-9);
  CHECK(m4 < m2 + 1e-9);
  CHECK(m1 * 1.0 <= 100.0);
  CHECK(m4 * 16.0 <= 100.0);
}
