#include "conifold/mesh.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>
#include <stdexcept>

#include "conifold/parallel.hpp"

namespace conifold {

namespace {

void add_edge(SampleMesh& mesh, int i, int j, double w) {
  auto& ai = mesh.adj[static_cast<size_t>(i)];
  for (auto& e : ai)
    if (e.first == j) {
      e.second = std::min(e.second, w);
      auto& aj = mesh.adj[static_cast<size_t>(j)];
      for (auto& e2 : aj)
        if (e2.first == i) e2.second = std::min(e2.second, w);
      return;
    }
  ai.emplace_back(j, w);
  mesh.adj[static_cast<size_t>(j)].emplace_back(i, w);
}

void label_components(SampleMesh& mesh) {
  int n = mesh.size();
  mesh.component.assign(static_cast<size_t>(n), -1);
  int comp = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (mesh.component[static_cast<size_t>(s)] >= 0) continue;
    stack.push_back(s);
    mesh.component[static_cast<size_t>(s)] = comp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [u, w] : mesh.adj[static_cast<size_t>(v)]) {
        (void)w;
        if (mesh.component[static_cast<size_t>(u)] < 0) {
          mesh.component[static_cast<size_t>(u)] = comp;
          stack.push_back(u);
        }
      }
    }
    ++comp;
  }
  mesh.component_count = comp;
}

struct Candidate {
  double d2;
  int idx;
  bool operator<(const Candidate& o) const { return d2 < o.d2; }
};

}  // namespace

SampleMesh build_mesh(const SubmanifoldSampler& sampler, int k, bool structured) {
  std::int64_t n = sampler.grid.size();
  if (n <= 0) throw std::invalid_argument("empty sampling grid");
  SampleMesh mesh;
  mesh.k = k;
  mesh.grid = sampler.grid;
  mesh.points.resize(n, sampler.ambient_dim);
  mesh.params.resize(n, sampler.param_dim);
  parallel_chunks(n, [&](std::int64_t lo, std::int64_t hi, int) {
    for (std::int64_t i = lo; i < hi; ++i) {
      VectorXd u = sampler.grid.at(i);
      mesh.params.row(i) = u;
      mesh.points.row(i) = sampler.map(u);
    }
  });
  mesh.adj.assign(static_cast<size_t>(n), {});

  const auto& axes = sampler.grid.axes;
  bool use_structured = structured && !axes.empty();
  if (use_structured) {
    // parameter-space neighborhood, radius 2 per axis, wrap-aware
    int dims = static_cast<int>(axes.size());
    std::vector<std::vector<Candidate>> cand_tls(static_cast<size_t>(worker_count()));
    parallel_chunks(n, [&](std::int64_t lo, std::int64_t hi, int w) {
      auto& cand = cand_tls[static_cast<size_t>(w)];
      for (std::int64_t i = lo; i < hi; ++i) {
        std::vector<int> idx = sampler.grid.indices(i);
        cand.clear();
        std::vector<int> offset(static_cast<size_t>(dims), -2);
        while (true) {
          std::int64_t flat = 0;
          bool valid = true;
          bool all_zero = true;
          for (int d = 0; d < dims && valid; ++d) {
            int v = idx[static_cast<size_t>(d)] + offset[static_cast<size_t>(d)];
            if (offset[static_cast<size_t>(d)] != 0) all_zero = false;
            const auto& ax = axes[static_cast<size_t>(d)];
            if (ax.wrap) {
              v = ((v % ax.n) + ax.n) % ax.n;
            } else if (v < 0 || v >= ax.n) {
              valid = false;
            }
            flat = flat * ax.n + v;
          }
          if (valid && !all_zero && flat != i) {
            double d2 = (mesh.points.row(flat) - mesh.points.row(i)).squaredNorm();
            cand.push_back({d2, static_cast<int>(flat)});
          }
          int d = dims - 1;
          while (d >= 0 && ++offset[static_cast<size_t>(d)] > 2) {
            offset[static_cast<size_t>(d)] = -2;
            --d;
          }
          if (d < 0) break;
        }
        // dedupe wrapped aliases
        std::sort(cand.begin(), cand.end(),
                  [](const Candidate& a, const Candidate& b) { return a.idx < b.idx; });
        cand.erase(std::unique(cand.begin(), cand.end(),
                               [](const Candidate& a, const Candidate& b) {
                                 return a.idx == b.idx;
                               }),
                   cand.end());
        std::sort(cand.begin(), cand.end());
        int keep = std::min<int>(k, static_cast<int>(cand.size()));
        cand.resize(static_cast<size_t>(keep));
        // adjacency writes must be serialized; stash per point instead
        for (const auto& c : cand)
          mesh.adj[static_cast<size_t>(i)].emplace_back(c.idx, std::sqrt(c.d2));
      }
    });
    // symmetrize
    std::vector<std::vector<std::pair<int, double>>> one_sided = std::move(mesh.adj);
    mesh.adj.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < n; ++i)
      for (const auto& [j, w] : one_sided[static_cast<size_t>(i)]) add_edge(mesh, i, j, w);
  } else {
    std::vector<std::vector<Candidate>> best(static_cast<size_t>(n));
    parallel_chunks(n, [&](std::int64_t lo, std::int64_t hi, int) {
      std::vector<Candidate> cand;
      cand.reserve(static_cast<size_t>(n));
      for (std::int64_t i = lo; i < hi; ++i) {
        cand.clear();
        for (std::int64_t j = 0; j < n; ++j) {
          if (j == i) continue;
          cand.push_back({(mesh.points.row(j) - mesh.points.row(i)).squaredNorm(),
                          static_cast<int>(j)});
        }
        int keep = std::min<int>(k, static_cast<int>(cand.size()));
        std::partial_sort(cand.begin(), cand.begin() + keep, cand.end());
        best[static_cast<size_t>(i)].assign(cand.begin(), cand.begin() + keep);
      }
    });
    for (int i = 0; i < n; ++i)
      for (const auto& c : best[static_cast<size_t>(i)])
        add_edge(mesh, i, c.idx, std::sqrt(c.d2));
  }

  label_components(mesh);
  return mesh;
}

SampleMesh refine_mesh(const SubmanifoldSampler& refined_sampler, const SampleMesh& coarse,
                       int k, bool structured) {
  SampleMesh fine = build_mesh(refined_sampler, k, structured);
  for (int i = 0; i < coarse.size(); ++i) {
    std::int64_t fi = coarse.grid.refined_index(i);
    for (const auto& [j, w] : coarse.adj[static_cast<size_t>(i)]) {
      std::int64_t fj = coarse.grid.refined_index(j);
      add_edge(fine, static_cast<int>(fi), static_cast<int>(fj), w);
    }
  }
  label_components(fine);
  return fine;
}

std::vector<double> dijkstra_from(const SampleMesh& mesh, int src, double cap) {
  int n = mesh.size();
  std::vector<double> dist(static_cast<size_t>(n), kUnreachable);
  using Node = std::pair<double, int>;
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap;
  dist[static_cast<size_t>(src)] = 0.0;
  heap.push({0.0, src});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[static_cast<size_t>(v)]) continue;
    if (d > cap) break;
    for (const auto& [u, w] : mesh.adj[static_cast<size_t>(v)]) {
      double nd = d + w;
      if (nd < dist[static_cast<size_t>(u)]) {
        dist[static_cast<size_t>(u)] = nd;
        heap.push({nd, u});
      }
    }
  }
  return dist;
}

double intrinsic_distance(const SampleMesh& mesh, int i, int j) {
  if (i == j) return 0.0;
  if (mesh.component[static_cast<size_t>(i)] != mesh.component[static_cast<size_t>(j)])
    return kUnreachable;
  return dijkstra_from(mesh, i)[static_cast<size_t>(j)];
}

TwoPointResult two_point_scan(const SampleMesh& mesh, double rho, double cap_factor) {
  if (!(rho > 0)) throw std::invalid_argument("rho must be > 0");
  int n = mesh.size();
  double cap = cap_factor * rho;
  int workers = worker_count();
  struct Partial {
    std::vector<TwoPointResult::Pair> top;
    std::int64_t pairs = 0, censored = 0;
  };
  std::vector<Partial> parts(static_cast<size_t>(workers));
  auto push_top = [](std::vector<TwoPointResult::Pair>& top, TwoPointResult::Pair p) {
    top.push_back(p);
    std::sort(top.begin(), top.end(),
              [](const auto& a, const auto& b) { return a.ratio > b.ratio; });
    if (top.size() > 10) top.resize(10);
  };
  parallel_chunks(n, [&](std::int64_t lo, std::int64_t hi, int w) {
    Partial& part = parts[static_cast<size_t>(w)];
    for (std::int64_t i = lo; i < hi; ++i) {
      std::vector<double> dist = dijkstra_from(mesh, static_cast<int>(i), cap);
      for (int j = static_cast<int>(i) + 1; j < n; ++j) {
        double dm = mesh.chordal(static_cast<int>(i), j);
        if (!(dm > 1e-12) || dm >= rho) continue;
        ++part.pairs;
        double dl = dist[static_cast<size_t>(j)];
        if (dl == kUnreachable) {
          ++part.censored;
          continue;
        }
        TwoPointResult::Pair pr{static_cast<int>(i), j, dm, dl, dl / dm};
        push_top(part.top, pr);
      }
    }
  });
  TwoPointResult r;
  for (const auto& part : parts) {
    r.pairs += part.pairs;
    r.censored += part.censored;
    for (const auto& p : part.top) r.witnesses.push_back(p);
  }
  if (r.pairs == 0)
    throw std::invalid_argument("no vertex pairs below rho; increase rho");
  std::sort(r.witnesses.begin(), r.witnesses.end(),
            [](const auto& a, const auto& b) {
              if (a.ratio != b.ratio) return a.ratio > b.ratio;
              return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
            });
  if (r.witnesses.size() > 10) r.witnesses.resize(10);
  r.empirical_c = r.witnesses.empty() ? 0.0 : r.witnesses.front().ratio;
  return r;
}

void export_mesh_csv(const SampleMesh& mesh, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  std::fprintf(f, "id");
  for (int d = 0; d < mesh.params.cols(); ++d) std::fprintf(f, ",p%d", d);
  for (int d = 0; d < mesh.points.cols(); ++d) std::fprintf(f, ",a%d", d);
  std::fprintf(f, "\n");
  for (int i = 0; i < mesh.size(); ++i) {
    std::fprintf(f, "%d", i);
    for (int d = 0; d < mesh.params.cols(); ++d)
      std::fprintf(f, ",%.17g", mesh.params(i, d));
    for (int d = 0; d < mesh.points.cols(); ++d)
      std::fprintf(f, ",%.17g", mesh.points(i, d));
    std::fprintf(f, "\n");
  }
  std::fclose(f);
}

SubmanifoldSampler ct_mesh_sampler(std::shared_ptr<const FrameField> field, double eps,
                                   const GridSpec& grid) {
  SubmanifoldSampler s;
  s.name = "ct_mesh(" + field->knot().name() + ")";
  s.param_dim = 3;
  s.ambient_dim = 11;
  s.grid = grid;
  s.map = [field, eps](const VectorXd& u) {
    ConormalCoords c = ConormalCoords::polar(u[0], u[1], u[2]);
    ResolvedPoint rp = ct_point(*field, eps, c);
    // moment-map embedding of the line: round sphere of radius 1/2
    complexd a = rp.line.u, b = rp.line.v;
    VectorXd out(11);
    out[0] = (a * std::conj(b)).real();
    out[1] = (a * std::conj(b)).imag();
    out[2] = 0.5 * (std::norm(a) - std::norm(b));
    for (int j = 0; j < 4; ++j) {
      out[3 + 2 * j] = rp.w[j].real();
      out[4 + 2 * j] = rp.w[j].imag();
    }
    return out;
  };
  return s;
}

}  // namespace conifold
