#pragma once

#include <limits>
#include <string>
#include <vector>

#include "conifold/sampler.hpp"

namespace conifold {

/// Point cloud on a parametrized submanifold with a symmetric k-nearest-
/// neighbor graph weighted by ambient chordal distances.
struct SampleMesh {
  MatrixXd points;  // N x ambient_dim
  MatrixXd params;  // N x param_dim
  int k = 0;
  std::vector<std::vector<std::pair<int, double>>> adj;
  GridSpec grid;
  int component_count = 1;
  std::vector<int> component;

  int size() const { return static_cast<int>(points.rows()); }
  double chordal(int i, int j) const { return (points.row(i) - points.row(j)).norm(); }
  bool connected() const { return component_count == 1; }
};

/// Builds the mesh over the sampler grid. For structured grids the k nearest
/// neighbors are selected from a parameter-space neighborhood (radius 2,
/// wrap-aware); brute force otherwise or when structured = false. A
/// disconnected graph is reported through component_count, not an error.
SampleMesh build_mesh(const SubmanifoldSampler& sampler, int k, bool structured = true);

/// Mesh over the doubled-density grid that keeps every coarse node and every
/// coarse edge, so intrinsic distances never increase under refinement.
/// `refined_sampler` must carry coarse.grid.refined().
SampleMesh refine_mesh(const SubmanifoldSampler& refined_sampler, const SampleMesh& coarse,
                       int k, bool structured = true);

constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Shortest-path distances from src; stops expanding past `cap`.
std::vector<double> dijkstra_from(const SampleMesh& mesh, int src,
                                  double cap = kUnreachable);

/// Shortest-path distance between two vertices (infinity marker when they
/// lie in different components).
double intrinsic_distance(const SampleMesh& mesh, int i, int j);

struct TwoPointResult {
  struct Pair {
    int i = 0, j = 0;
    double ambient = 0.0, intrinsic = 0.0, ratio = 0.0;
  };
  double empirical_c = 0.0;
  std::vector<Pair> witnesses;  // top pairs by ratio
  std::int64_t pairs = 0;
  std::int64_t censored = 0;  // intrinsic search hit the cap
};

/// Max over vertex pairs with ambient distance below rho of the
/// intrinsic/ambient ratio. Searches are capped at cap_factor * rho; pairs
/// that exceed the cap are counted as censored (their ratio is at least
/// cap / ambient). Throws when no pair qualifies.
TwoPointResult two_point_scan(const SampleMesh& mesh, double rho,
                              double cap_factor = 50.0);

/// CSV export: id, parameter columns, ambient columns.
void export_mesh_csv(const SampleMesh& mesh, const std::string& path);

/// Transited conormal bundle embedded for distance work: the CP^1 line on
/// the round 2-sphere of radius 1/2 (isometric to the Fubini-Study factor)
/// next to the w-chart, 11 ambient columns in all.
SubmanifoldSampler ct_mesh_sampler(std::shared_ptr<const FrameField> field, double eps,
                                   const GridSpec& grid);

}  // namespace conifold
