#include "conifold/sampler.hpp"

#include <cmath>

namespace conifold {

std::int64_t GridSpec::size() const {
  std::int64_t s = 1;
  for (const auto& a : axes) s *= a.n;
  return s;
}

double GridSpec::axis_value(int axis, int idx) const {
  const GridAxis& a = axes[static_cast<size_t>(axis)];
  if (a.wrap) return a.lo + (a.hi - a.lo) * idx / a.n;
  if (a.n == 1) return a.lo;
  return a.lo + (a.hi - a.lo) * idx / (a.n - 1);
}

std::vector<int> GridSpec::indices(std::int64_t flat) const {
  std::vector<int> idx(axes.size());
  for (int d = static_cast<int>(axes.size()) - 1; d >= 0; --d) {
    idx[static_cast<size_t>(d)] = static_cast<int>(flat % axes[static_cast<size_t>(d)].n);
    flat /= axes[static_cast<size_t>(d)].n;
  }
  return idx;
}

VectorXd GridSpec::at(std::int64_t flat) const {
  std::vector<int> idx = indices(flat);
  VectorXd u(axes.size());
  for (size_t d = 0; d < axes.size(); ++d)
    u[static_cast<Eigen::Index>(d)] = axis_value(static_cast<int>(d), idx[d]);
  return u;
}

GridSpec GridSpec::refined() const {
  GridSpec r = *this;
  for (auto& a : r.axes) a.n = a.wrap ? 2 * a.n : 2 * a.n - 1;
  return r;
}

std::int64_t GridSpec::refined_index(std::int64_t coarse_flat) const {
  std::vector<int> idx = indices(coarse_flat);
  GridSpec fine = refined();
  std::int64_t flat = 0;
  for (size_t d = 0; d < axes.size(); ++d)
    flat = flat * fine.axes[d].n + 2 * idx[d];
  return flat;
}

MatrixXd SubmanifoldSampler::tangent_basis(const VectorXd& u, const FdConfig& cfg) const {
  if (analytic_jacobian) return analytic_jacobian(u);
  return jacobian_fd(local_map(u), u, cfg);
}

std::shared_ptr<const FrameField> make_frame_field(const KnotCurve& knot) {
  return std::make_shared<const FrameField>(knot);
}

namespace {

ConormalCoords coords_of(const VectorXd& u) { return {u[0], u[1], u[2]}; }

VectorXd resolved_chart_coords(const ResolvedPoint& rp, int cp1_chart) {
  VectorXd out(10);
  complexd z = (cp1_chart == 0) ? rp.line.u / rp.line.v : rp.line.v / rp.line.u;
  out[0] = z.real();
  out[1] = z.imag();
  for (int j = 0; j < 4; ++j) {
    out[2 + 2 * j] = rp.w[j].real();
    out[3 + 2 * j] = rp.w[j].imag();
  }
  return out;
}

}  // namespace

SubmanifoldSampler conormal_sampler(std::shared_ptr<const FrameField> field, double eps,
                                    const GridSpec& grid) {
  SubmanifoldSampler s;
  s.name = "conormal(" + field->knot().name() + ")";
  s.param_dim = 3;
  s.ambient_dim = 8;
  s.grid = grid;
  s.map = [field, eps](const VectorXd& u) {
    return perturbed_conormal_point(*field, eps, coords_of(u)).flat();
  };
  return s;
}

SubmanifoldSampler feps_image_sampler(std::shared_ptr<const FrameField> field, double eps,
                                      const GridSpec& grid) {
  SubmanifoldSampler s;
  s.name = "feps_image(" + field->knot().name() + ")";
  s.param_dim = 3;
  s.ambient_dim = 8;
  s.grid = grid;
  s.map = [field, eps](const VectorXd& u) {
    PhasePoint q = conormal_point(*field, coords_of(u));
    return contract_Feps(eps, q).flat();
  };
  return s;
}

SubmanifoldSampler f_perturbed_image_sampler(std::shared_ptr<const FrameField> field,
                                             double eps, const GridSpec& grid) {
  SubmanifoldSampler s;
  s.name = "f_image(" + field->knot().name() + ")";
  s.param_dim = 3;
  s.ambient_dim = 8;
  s.grid = grid;
  s.map = [field, eps](const VectorXd& u) {
    PhasePoint q = perturbed_conormal_point(*field, eps, coords_of(u));
    return contract_F(q).flat();
  };
  return s;
}

SubmanifoldSampler ct_sampler(std::shared_ptr<const FrameField> field, double eps,
                              const GridSpec& grid) {
  SubmanifoldSampler s;
  s.name = "ct(" + field->knot().name() + ")";
  s.param_dim = 3;
  s.ambient_dim = 10;
  s.grid = grid;
  auto point = [field, eps](const VectorXd& u, int pair) {
    ConormalCoords c = ConormalCoords::polar(u[0], u[1], u[2]);
    return ct_point_pair(*field, eps, c, pair);
  };
  s.map = [field, eps](const VectorXd& u) {
    ConormalCoords c = ConormalCoords::polar(u[0], u[1], u[2]);
    ResolvedPoint rp = ct_point(*field, eps, c);
    int cp1_chart = (std::abs(rp.line.v) >= std::abs(rp.line.u)) ? 0 : 1;
    return resolved_chart_coords(rp, cp1_chart);
  };
  s.local_map_factory = [point](const VectorXd& center) -> MapRn {
    ResolvedPoint rp0 = point(center, 0);
    // pin both the lift pair and the CP^1 affine chart at the center
    CVec4 w0 = rp0.w;
    int pair = lift_pair_choice(w0);
    ResolvedPoint rp = point(center, pair);
    int cp1_chart = (std::abs(rp.line.v) >= std::abs(rp.line.u)) ? 0 : 1;
    return [point, pair, cp1_chart](const VectorXd& u) {
      return resolved_chart_coords(point(u, pair), cp1_chart);
    };
  };
  return s;
}

SubmanifoldSampler ct_unknot_oracle_sampler(const GridSpec& grid) {
  SubmanifoldSampler s;
  s.name = "ct_oracle(unknot)";
  s.param_dim = 3;
  s.ambient_dim = 10;
  s.grid = grid;
  s.map = [](const VectorXd& u) {
    ResolvedPoint rp = ct_unknot_oracle(u[0], u[1], u[2]);
    return resolved_chart_coords(rp, 0);
  };
  return s;
}

SubmanifoldSampler sr_slice_sampler(std::shared_ptr<const FrameField> field, double eps,
                                    double r, const GridSpec& grid) {
  SubmanifoldSampler s;
  s.name = "sr_slice(" + field->knot().name() + ")";
  s.param_dim = 2;
  s.ambient_dim = 8;
  s.grid = grid;
  s.map = [field, eps, r](const VectorXd& u) {
    ConormalCoords c = ConormalCoords::polar(u[0], u[1], r);
    PhasePoint q = conormal_point(*field, c);
    return contract_Feps(eps, q).flat();
  };
  return s;
}

SubmanifoldSampler box_sampler(const GridSpec& grid, std::string name) {
  SubmanifoldSampler s;
  s.name = std::move(name);
  s.param_dim = static_cast<int>(grid.axes.size());
  s.ambient_dim = s.param_dim;
  s.grid = grid;
  s.map = [](const VectorXd& u) { return u; };
  s.analytic_jacobian = [n = s.param_dim](const VectorXd&) {
    return MatrixXd::Identity(n, n);
  };
  return s;
}

SubmanifoldSampler cone_embed_sampler(const GridSpec& grid) {
  SubmanifoldSampler s;
  s.name = "cone_chart_embed";
  s.param_dim = 6;
  s.ambient_dim = 8;
  s.grid = grid;
  s.map = [](const VectorXd& u) {
    ChartPoint cp;
    cp.chart = 1;
    cp.z = complexd(u[0], u[1]);
    cp.xi = complexd(u[2], u[3]);
    cp.eta = complexd(u[4], u[5]);
    CVec4 w = cone_chart_embed(cp);
    VectorXd out(8);
    for (int j = 0; j < 4; ++j) {
      out[2 * j] = w[j].real();
      out[2 * j + 1] = w[j].imag();
    }
    return out;
  };
  return s;
}

SubmanifoldSampler sphere3_sampler(double radius, const GridSpec& grid) {
  SubmanifoldSampler s;
  s.name = "sphere3";
  s.param_dim = 3;
  s.ambient_dim = 4;
  s.grid = grid;
  s.map = [radius](const VectorXd& u) {
    double a = u[0], b = u[1], c = u[2];
    VectorXd x(4);
    x << std::cos(a), std::sin(a) * std::cos(b), std::sin(a) * std::sin(b) * std::cos(c),
        std::sin(a) * std::sin(b) * std::sin(c);
    return VectorXd(radius * x);
  };
  s.analytic_jacobian = [radius](const VectorXd& u) {
    double a = u[0], b = u[1], c = u[2];
    double sa = std::sin(a), ca = std::cos(a);
    double sb = std::sin(b), cb = std::cos(b);
    double sc = std::sin(c), cc = std::cos(c);
    MatrixXd J(4, 3);
    J << -sa, 0, 0,                                    //
        ca * cb, -sa * sb, 0,                          //
        ca * sb * cc, sa * cb * cc, -sa * sb * sc,     //
        ca * sb * sc, sa * cb * sc, sa * sb * cc;      //
    return MatrixXd(radius * J);
  };
  return s;
}

SubmanifoldSampler clifford_sampler(const GridSpec& grid) {
  SubmanifoldSampler s;
  s.name = "clifford_torus";
  s.param_dim = 2;
  s.ambient_dim = 4;
  s.grid = grid;
  const double r2 = 1.0 / std::sqrt(2.0);
  s.map = [r2](const VectorXd& u) {
    VectorXd x(4);
    x << r2 * std::cos(u[0]), r2 * std::sin(u[0]), r2 * std::cos(u[1]), r2 * std::sin(u[1]);
    return x;
  };
  return s;
}

SubmanifoldSampler circle_sampler(int n) {
  SubmanifoldSampler s;
  s.name = "circle";
  s.param_dim = 1;
  s.ambient_dim = 2;
  s.grid.axes = {GridAxis{0.0, 2.0 * M_PI, n, true}};
  s.map = [](const VectorXd& u) {
    VectorXd x(2);
    x << std::cos(u[0]), std::sin(u[0]);
    return x;
  };
  return s;
}

SubmanifoldSampler s1xr_sampler(const GridSpec& grid) {
  SubmanifoldSampler s;
  s.name = "s1_x_r";
  s.param_dim = 2;
  s.ambient_dim = 4;
  s.grid = grid;
  s.map = [](const VectorXd& u) {
    VectorXd x(4);
    x << std::cos(u[0]), std::sin(u[0]), u[1], 0.0;
    return x;
  };
  return s;
}

SubmanifoldSampler sin_exp_graph_sampler(double x_lo, double x_hi, int n) {
  SubmanifoldSampler s;
  s.name = "sin_exp_graph";
  s.param_dim = 1;
  s.ambient_dim = 2;
  s.grid.axes = {GridAxis{x_lo, x_hi, n, false}};
  s.map = [](const VectorXd& u) {
    VectorXd x(2);
    x << u[0], std::sin(M_PI * std::exp(u[0]));
    return x;
  };
  return s;
}

}  // namespace conifold
