#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "conifold/mesh.hpp"
#include "conifold/rng.hpp"
#include "conifold/suites.hpp"

using namespace conifold;

TEST_CASE("circle mesh with two neighbors is the cycle graph") {
  SampleMesh mesh = build_mesh(circle_sampler(256), 2);
  CHECK(mesh.size() == 256);
  CHECK(mesh.connected());
  for (int i = 0; i < mesh.size(); ++i) {
    CHECK(mesh.adj[static_cast<size_t>(i)].size() == 2);
  }
  CHECK(intrinsic_distance(mesh, 0, 128) == doctest::Approx(M_PI).epsilon(2e-2 / M_PI));
  CHECK(intrinsic_distance(mesh, 17, 17) == 0.0);
}

TEST_CASE("empty grids are rejected") {
  SubmanifoldSampler s = circle_sampler(256);
  s.grid.axes.clear();
  s.grid.axes.push_back(GridAxis{0, 1, 0, false});
  CHECK_THROWS_AS(build_mesh(s, 2), std::invalid_argument);
}

TEST_CASE("two far clusters come out disconnected with an infinity marker") {
  SubmanifoldSampler two;
  two.param_dim = 1;
  two.ambient_dim = 2;
  two.grid.axes = {GridAxis{0.0, 1.0, 40, false}};
  two.map = [](const VectorXd& u) {
    VectorXd out(2);
    double t = u[0];
    if (t < 0.5)
      out << std::cos(4 * M_PI * t), std::sin(4 * M_PI * t);
    else
      out << 100 + std::cos(4 * M_PI * t), std::sin(4 * M_PI * t);
    return out;
  };
  SampleMesh mesh = build_mesh(two, 2, false);
  CHECK(mesh.component_count == 2);
  int left = 0, right = 39;
  CHECK(intrinsic_distance(mesh, left, right) == kUnreachable);
}

TEST_CASE("triangle inequality on sampled triples") {
  SampleMesh mesh = build_mesh(circle_sampler(128), 4);
  auto rng = cell_rng(71, 0);
  for (int trial = 0; trial < 40; ++trial) {
    int a = static_cast<int>(uniform(rng, 0, 128));
    int b = static_cast<int>(uniform(rng, 0, 128));
    int c = static_cast<int>(uniform(rng, 0, 128));
    a %= 128;
    b %= 128;
    c %= 128;
    double ab = intrinsic_distance(mesh, a, b);
    double bc = intrinsic_distance(mesh, b, c);
    double ac = intrinsic_distance(mesh, a, c);
    CHECK(ac <= ab + bc + 1e-12);
  }
}

TEST_CASE("graph distance dominates the ambient distance") {
  auto field = make_frame_field(unknot());
  GridSpec g;
  g.axes = {GridAxis{0, 2 * M_PI, 12, true}, GridAxis{0, 2 * M_PI, 12, true},
            GridAxis{0.25, 1.5, 4, false}};
  SampleMesh mesh = build_mesh(ct_mesh_sampler(field, 0.1, g), 12);
  CHECK(mesh.connected());
  auto rng = cell_rng(72, 0);
  for (int trial = 0; trial < 30; ++trial) {
    int i = static_cast<int>(uniform(rng, 0, mesh.size())) % mesh.size();
    int j = static_cast<int>(uniform(rng, 0, mesh.size())) % mesh.size();
    double dl = intrinsic_distance(mesh, i, j);
    if (dl == kUnreachable) continue;
    CHECK(dl >= mesh.chordal(i, j) - 1e-12);
  }
}

TEST_CASE("refinement keeps coarse paths so distances never increase") {
  auto field = make_frame_field(unknot());
  GridSpec g;
  g.axes = {GridAxis{0, 2 * M_PI, 10, true}, GridAxis{0, 2 * M_PI, 10, true},
            GridAxis{0.25, 1.5, 3, false}};
  SubmanifoldSampler coarse_s = ct_mesh_sampler(field, 0.1, g);
  SampleMesh coarse = build_mesh(coarse_s, 10);
  SubmanifoldSampler fine_s = ct_mesh_sampler(field, 0.1, g.refined());
  SampleMesh fine = refine_mesh(fine_s, coarse, 10);

  auto rng = cell_rng(73, 0);
  for (int trial = 0; trial < 25; ++trial) {
    int i = static_cast<int>(uniform(rng, 0, coarse.size())) % coarse.size();
    int j = static_cast<int>(uniform(rng, 0, coarse.size())) % coarse.size();
    double dc = intrinsic_distance(coarse, i, j);
    if (dc == kUnreachable) continue;
    int fi = static_cast<int>(coarse.grid.refined_index(i));
    int fj = static_cast<int>(coarse.grid.refined_index(j));
    CHECK((coarse.points.row(i) - fine.points.row(fi)).norm() < 1e-12);
    double df = intrinsic_distance(fine, fi, fj);
    CHECK(df <= dc + 1e-9);
  }
}

TEST_CASE("two-point constant of the circle stays below the arc-chord bound") {
  SampleMesh mesh = build_mesh(circle_sampler(256), 2);
  TwoPointResult t = two_point_scan(mesh, 0.5);
  CHECK(t.censored == 0);
  CHECK(t.empirical_c <= M_PI / 2 + 5e-2);
  CHECK_THROWS_AS(two_point_scan(mesh, -1.0), std::invalid_argument);
}

TEST_CASE("compressed oscillation fixture defeats any fixed constant") {
  double prev = 0;
  for (double lo : {1.0, 2.0, 3.0}) {
    SampleMesh mesh = build_mesh(sin_exp_graph_sampler(lo, lo + 1.0, 5000), 2);
    TwoPointResult t = two_point_scan(mesh, 0.5, 400.0);
    CHECK(t.empirical_c > prev);
    prev = t.empirical_c;
  }
  CHECK(prev > 40.0);
}

TEST_CASE("slice dilation scales path lengths inside the stated window") {
  auto field = make_frame_field(unknot());
  double eps = 0.1;
  for (double r : {2.0, 4.0}) {
    ScalingRange sc = sr_scaling_range(*field, eps, r, 16, 99);
    CHECK(sc.lo >= r * (1 - 2e-2));
    CHECK(sc.hi <= std::sqrt(r * r + eps * eps) * (1 + 2e-2));
  }
}

TEST_CASE("mesh export writes one row per vertex") {
  SampleMesh mesh = build_mesh(circle_sampler(16), 2);
  const char* path = "mesh_export_test.csv";
  export_mesh_csv(mesh, path);
  std::ifstream in(path);
  REQUIRE(bool(in));
  std::string line;
  std::getline(in, line);
  CHECK(line == "id,p0,a0,a1");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 16);
  std::remove(path);
}
