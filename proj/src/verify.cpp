#include "conifold/verify.hpp"

#include <cmath>

#include "conifold/parallel.hpp"
#include "conifold/rng.hpp"

namespace conifold {

namespace {

constexpr double kCondLimit = 1e8;

complexd slot(const VectorXd& a, int k) { return complexd(a[2 * k], a[2 * k + 1]); }

void put_slot(VectorXd& a, int k, complexd v) {
  a[2 * k] = v.real();
  a[2 * k + 1] = v.imag();
}

/// columns of B made g-orthonormal; returns false on a degenerate Gram.
bool g_orthonormalize(const MetricHandle& g, const VectorXd& base, MatrixXd& B) {
  MatrixXd G = g.gram(base, B);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(G);
  double lo = es.eigenvalues().minCoeff();
  double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0) || hi / lo > kCondLimit) return false;
  MatrixXd inv_sqrt = es.operatorInverseSqrt();
  B = B * inv_sqrt;
  return true;
}

}  // namespace

// --- maps --------------------------------------------------------------------

MapHandle make_lift_map() {
  MapHandle m;
  m.name = "lift";
  m.src_dim = 8;
  m.tgt_dim = 10;
  auto eval = [](const VectorXd& wr, int pair, int cp1_chart) {
    ResolvedPoint rp = resolve_lift_pair(w_of_real(wr), pair, 1e-6);
    VectorXd out(10);
    complexd z = (cp1_chart == 0) ? rp.line.u / rp.line.v : rp.line.v / rp.line.u;
    put_slot(out, 0, z);
    out.tail(8) = wr;
    return out;
  };
  m.apply = [eval](const VectorXd& wr) {
    CVec4 w = w_of_real(wr);
    ResolvedPoint rp = resolve_lift(w);
    int chart = (std::abs(rp.line.v) >= std::abs(rp.line.u)) ? 0 : 1;
    return eval(wr, lift_pair_choice(w), chart);
  };
  m.local_factory = [eval](const VectorXd& center) -> MapRn {
    CVec4 w = w_of_real(center);
    int pair = lift_pair_choice(w);
    ResolvedPoint rp = resolve_lift_pair(w, pair);
    int chart = (std::abs(rp.line.v) >= std::abs(rp.line.u)) ? 0 : 1;
    return [eval, pair, chart](const VectorXd& wr) { return eval(wr, pair, chart); };
  };
  return m;
}

MapHandle make_cone_chart_map(int chart) {
  MapHandle m;
  m.name = "cone_chart";
  m.src_dim = 6;
  m.tgt_dim = 8;
  m.apply = [chart](const VectorXd& u) {
    ChartPoint cp;
    cp.chart = chart;
    cp.z = slot(u, 0);
    cp.xi = slot(u, 1);
    cp.eta = slot(u, 2);
    return real_of_w(cone_chart_embed(cp));
  };
  return m;
}

MapHandle make_lift_trace_map() {
  MapHandle m;
  m.name = "lift_trace";
  m.src_dim = 8;
  m.tgt_dim = 2;
  MapHandle lift = make_lift_map();
  m.apply = [lift](const VectorXd& wr) { return VectorXd(lift.apply(wr).head(2)); };
  m.local_factory = [lift](const VectorXd& center) -> MapRn {
    MapRn loc = lift.local(center);
    return [loc](const VectorXd& wr) { return VectorXd(loc(wr).head(2)); };
  };
  return m;
}

MapHandle make_ball_chart_map(const VectorXd& center6) {
  MapHandle m;
  m.name = "ball_chart";
  m.src_dim = 6;
  m.tgt_dim = 6;
  double s = std::sqrt(1.0 + center6.tail(4).squaredNorm());
  m.apply = [center6, s](const VectorXd& u) {
    VectorXd out = center6;
    out[0] += u[0] / s;
    out[1] += u[1] / s;
    out.tail(4) += u.tail(4);
    return out;
  };
  return m;
}

// --- metrics -------------------------------------------------------------------

MetricHandle make_cone_metric() {
  MetricHandle g;
  g.name = "g_cone";
  g.dim = 6;
  g.eval = [](const VectorXd& base, const VectorXd& u, const VectorXd& v) {
    double fib = std::norm(slot(base, 1)) + std::norm(slot(base, 2));
    return fib * u.head(2).dot(v.head(2)) + u.tail(4).dot(v.tail(4));
  };
  return g;
}

MetricHandle make_ball_metric() {
  MetricHandle g;
  g.name = "g_tilde";
  g.dim = 6;
  g.eval = [](const VectorXd& base, const VectorXd& u, const VectorXd& v) {
    double fib = 1.0 + std::norm(slot(base, 1)) + std::norm(slot(base, 2));
    return fib * u.head(2).dot(v.head(2)) + u.tail(4).dot(v.tail(4));
  };
  return g;
}

MetricHandle make_fs_metric() {
  MetricHandle g;
  g.name = "g_fs";
  g.dim = 2;
  g.eval = [](const VectorXd& base, const VectorXd& u, const VectorXd& v) {
    return fubini_study_eval(slot(base, 0), slot(u, 0), slot(v, 0));
  };
  return g;
}

// --- perturbation forms ----------------------------------------------------------

FormHandle make_omega_pushforward(std::shared_ptr<const PerturbationField> field,
                                  double eps) {
  FormHandle f;
  f.name = "omega_pushforward";
  f.dim = 8;
  f.eval = [field, eps](const VectorXd& base, const VectorXd& u, const VectorXd& v) {
    Mat4 D = field->jacobian(base.head<4>());
    Vec4 du = u.head<4>(), dv = v.head<4>();
    Vec4 pu = u.tail<4>() - eps * (D * du);
    Vec4 pv = v.tail<4>() - eps * (D * dv);
    return du.dot(pv) - dv.dot(pu);
  };
  return f;
}

FormHandle make_omega_tilde(std::shared_ptr<const PerturbationField> field, double eps) {
  FormHandle f;
  f.name = "omega_tilde";
  f.dim = 10;
  f.eval = [field, eps](const VectorXd& base, const VectorXd& u, const VectorXd& v) {
    // drop the CP^1 slot, pull the w-part back to (x,p)
    PhasePoint q = phase_of_z(coords_zw({w_of_real(base.tail(8)), CoordSystem::W},
                                        CoordSystem::Z));
    Vec8 du = tangent_of_w(w_of_real(u.tail(8)));
    Vec8 dv = tangent_of_w(w_of_real(v.tail(8)));
    Mat4 D = field->jacobian(q.x);
    Vec4 pu = du.tail<4>() - eps * (D * du.head<4>());
    Vec4 pv = dv.tail<4>() - eps * (D * dv.head<4>());
    return du.head<4>().dot(pv) - dv.head<4>().dot(pu);
  };
  return f;
}

MatrixXd resolved_tangent_basis(const VectorXd& pt10, int cp1_chart) {
  complexd z = slot(pt10, 0);
  CVec4 w = w_of_real(pt10.tail(8));
  complexd xi, eta;
  if (cp1_chart == 1) {  // z = v/u, w = (xi, z xi, eta, z eta)
    xi = w[0];
    eta = w[2];
  } else {  // z = u/v, w = (z xi, xi, z eta, eta)
    xi = w[1];
    eta = w[3];
  }
  MatrixXd B(10, 6);
  const complexd one{1, 0}, i{0, 1};
  auto column = [&](complexd dz, complexd dxi, complexd deta) {
    VectorXd col = VectorXd::Zero(10);
    put_slot(col, 0, dz);
    CVec4 dw;
    if (cp1_chart == 1)
      dw << dxi, dz * xi + z * dxi, deta, dz * eta + z * deta;
    else
      dw << dz * xi + z * dxi, dxi, dz * eta + z * deta, deta;
    col.tail(8) = real_of_w(dw);
    return col;
  };
  B.col(0) = column(one, 0, 0);
  B.col(1) = column(i, 0, 0);
  B.col(2) = column(0, one, 0);
  B.col(3) = column(0, i, 0);
  B.col(4) = column(0, 0, one);
  B.col(5) = column(0, 0, i);
  return B;
}

// --- engines -----------------------------------------------------------------

RestrictionResult form_restriction_max(const FormHandle& form,
                                       const SubmanifoldSampler& sampler,
                                       const MetricHandle& normalizer, const FdConfig& fd) {
  const std::int64_t n = sampler.grid.size();
  int workers = worker_count();
  struct Partial {
    double max_abs = -1.0;
    VectorXd arg;
    std::int64_t excluded = 0;
  };
  std::vector<Partial> parts(static_cast<size_t>(workers));
  parallel_chunks(n, [&](std::int64_t lo, std::int64_t hi, int w) {
    Partial& p = parts[static_cast<size_t>(w)];
    for (std::int64_t idx = lo; idx < hi; ++idx) {
      VectorXd u = sampler.grid.at(idx);
      VectorXd base = sampler.map(u);
      MatrixXd B = sampler.tangent_basis(u, fd);
      MatrixXd Bn = B;
      if (!g_orthonormalize(normalizer, base, Bn)) {
        ++p.excluded;
        continue;
      }
      for (int i = 0; i < Bn.cols(); ++i)
        for (int j = i + 1; j < Bn.cols(); ++j) {
          double val = std::abs(form.eval(base, Bn.col(i), Bn.col(j)));
          if (val > p.max_abs) {
            p.max_abs = val;
            p.arg = u;
          }
        }
    }
  });
  RestrictionResult r;
  r.count = n;
  for (const auto& p : parts) {
    r.excluded += p.excluded;
    if (p.max_abs > r.max_abs) {
      r.max_abs = p.max_abs;
      r.arg_param = p.arg;
    }
  }
  return r;
}

TamenessResult tameness_bounds(const FormHandle& form, const ComplexStructureHandle& J,
                               const MetricHandle& g, const MatrixXd& base_points,
                               const TangentSpaceFn& tangent_space, int vector_samples,
                               std::uint64_t seed) {
  const std::int64_t n = base_points.rows();
  int workers = worker_count();
  struct Partial {
    double inf = std::numeric_limits<double>::infinity();
    double sup = -std::numeric_limits<double>::infinity();
    VectorXd witness;
    std::int64_t samples = 0;
  };
  std::vector<Partial> parts(static_cast<size_t>(workers));
  parallel_chunks(n, [&](std::int64_t lo, std::int64_t hi, int w) {
    Partial& p = parts[static_cast<size_t>(w)];
    for (std::int64_t idx = lo; idx < hi; ++idx) {
      VectorXd base = base_points.row(idx);
      MatrixXd span = tangent_space ? tangent_space(base)
                                    : MatrixXd(MatrixXd::Identity(form.dim, form.dim));
      auto rng = cell_rng(seed, static_cast<std::uint64_t>(idx));
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (int s = 0; s < vector_samples; ++s) {
        VectorXd c(span.cols());
        for (int k = 0; k < c.size(); ++k) c[k] = gauss(rng);
        VectorXd X = span * c;
        double gx = g.eval(base, X, X);
        if (!(gx > 1e-14)) continue;
        double ratio = form.eval(base, X, J.apply(base, X)) / gx;
        ++p.samples;
        if (ratio < p.inf) {
          p.inf = ratio;
          p.witness = base;
        }
        p.sup = std::max(p.sup, ratio);
      }
    }
  });
  TamenessResult r;
  r.inf_ratio = std::numeric_limits<double>::infinity();
  r.sup_ratio = -std::numeric_limits<double>::infinity();
  for (const auto& p : parts) {
    r.samples += p.samples;
    if (p.inf < r.inf_ratio) {
      r.inf_ratio = p.inf;
      r.witness_base = p.witness;
    }
    r.sup_ratio = std::max(r.sup_ratio, p.sup);
  }
  return r;
}

BilipschitzResult bilipschitz_bounds(const MapHandle& map, const MetricHandle& src_metric,
                                     const MetricHandle& tgt_metric,
                                     const SubmanifoldSampler& sampler, const FdConfig& fd) {
  const std::int64_t n = sampler.grid.size();
  int workers = worker_count();
  struct Partial {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    std::int64_t excluded = 0;
  };
  std::vector<Partial> parts(static_cast<size_t>(workers));
  parallel_chunks(n, [&](std::int64_t lo_i, std::int64_t hi_i, int w) {
    Partial& p = parts[static_cast<size_t>(w)];
    for (std::int64_t idx = lo_i; idx < hi_i; ++idx) {
      VectorXd u = sampler.grid.at(idx);
      VectorXd base = sampler.map(u);
      MatrixXd B = sampler.tangent_basis(u, fd);
      MatrixXd G = src_metric.gram(base, B);
      Eigen::SelfAdjointEigenSolver<MatrixXd> esg(G);
      if (!(esg.eigenvalues().minCoeff() > 0) ||
          esg.eigenvalues().maxCoeff() / esg.eigenvalues().minCoeff() > kCondLimit) {
        ++p.excluded;
        continue;
      }
      MapRn local = map.local(base);
      MatrixXd Dm = jacobian_fd(local, base, fd);
      MatrixXd Bt = Dm * B;
      VectorXd base_t = local(base);
      MatrixXd Gt = tgt_metric.gram(base_t, Bt);
      Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> ges(Gt, G);
      p.lo = std::min(p.lo, ges.eigenvalues().minCoeff());
      p.hi = std::max(p.hi, ges.eigenvalues().maxCoeff());
    }
  });
  BilipschitzResult r;
  r.count = n;
  r.min_eig = std::numeric_limits<double>::infinity();
  r.max_eig = -std::numeric_limits<double>::infinity();
  for (const auto& p : parts) {
    r.excluded += p.excluded;
    r.min_eig = std::min(r.min_eig, p.lo);
    r.max_eig = std::max(r.max_eig, p.hi);
  }
  return r;
}

namespace {

/// least-squares coefficients of X in the column span of B; throws when X is
/// not tangent within tolerance.
VectorXd tangent_coefficients(const MatrixXd& B, const VectorXd& X, double tol = 1e-6) {
  VectorXd c = B.colPivHouseholderQr().solve(X);
  double res = (B * c - X).norm();
  if (res > tol * std::max(1.0, X.norm()))
    throw std::invalid_argument("vector is not tangent to the sampled submanifold");
  return c;
}

}  // namespace

VectorXd second_fundamental_form(const SubmanifoldSampler& sub, const VectorXd& u,
                                 const VectorXd& X, const VectorXd& Y, const FdConfig& fd) {
  MatrixXd B = sub.tangent_basis(u, fd);
  VectorXd a = tangent_coefficients(B, X);
  VectorXd b = tangent_coefficients(B, Y);
  VectorXd S = second_directional_fd(sub.local_map(u), u, a, b, fd);
  // Euclidean projection off the tangent space
  MatrixXd G = B.transpose() * B;
  VectorXd coef = G.ldlt().solve(B.transpose() * S);
  return S - B * coef;
}

ChristoffelHandle christoffel_zero(int dim) {
  ChristoffelHandle c;
  c.name = "flat";
  c.dim = dim;
  c.eval = [dim](const VectorXd&, const VectorXd&, const VectorXd&) {
    return VectorXd(VectorXd::Zero(dim));
  };
  return c;
}

ChristoffelHandle christoffel_of_metric(const MetricHandle& g, const FdConfig& fd) {
  ChristoffelHandle c;
  c.name = "of(" + g.name + ")";
  c.dim = g.dim;
  const int n = g.dim;
  c.eval = [g, n, fd](const VectorXd& base, const VectorXd& X, const VectorXd& Y) {
    auto metric_matrix = [&g, n](const VectorXd& q) {
      MatrixXd I = MatrixXd::Identity(n, n);
      return g.gram(q, I);
    };
    double h = 10.0 * fd_step(base, fd);
    std::vector<MatrixXd> dG(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l) {
      VectorXd qp = base, qm = base;
      qp[l] += h;
      qm[l] -= h;
      dG[static_cast<size_t>(l)] = (metric_matrix(qp) - metric_matrix(qm)) / (2 * h);
    }
    MatrixXd Ginv = metric_matrix(base).inverse();
    VectorXd lower = VectorXd::Zero(n);
    for (int l = 0; l < n; ++l) {
      double s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          s += 0.5 *
               (dG[static_cast<size_t>(i)](j, l) + dG[static_cast<size_t>(j)](i, l) -
                dG[static_cast<size_t>(l)](i, j)) *
               X[i] * Y[j];
      lower[l] = s;
    }
    return VectorXd(Ginv * lower);
  };
  return c;
}

ChristoffelHandle christoffel_fs_block(int dim) {
  ChristoffelHandle c;
  c.name = "fs_block";
  c.dim = dim;
  c.eval = [dim](const VectorXd& base, const VectorXd& X, const VectorXd& Y) {
    VectorXd out = VectorXd::Zero(dim);
    double x = base[0], y = base[1];
    double den = 1.0 + x * x + y * y;
    double sx = -2.0 * x / den, sy = -2.0 * y / den;
    double x1 = X[0], x2 = X[1], y1 = Y[0], y2 = Y[1];
    out[0] = sx * (x1 * y1 - x2 * y2) + sy * (x1 * y2 + x2 * y1);
    out[1] = sy * (x2 * y2 - x1 * y1) + sx * (x1 * y2 + x2 * y1);
    return out;
  };
  return c;
}

VectorXd second_fundamental_form_g(const SubmanifoldSampler& sub, const VectorXd& u,
                                   const VectorXd& X, const VectorXd& Y,
                                   const MetricHandle& g, const ChristoffelHandle& gamma,
                                   const FdConfig& fd) {
  MatrixXd B = sub.tangent_basis(u, fd);
  VectorXd a = tangent_coefficients(B, X);
  VectorXd b = tangent_coefficients(B, Y);
  VectorXd base = sub.map(u);
  VectorXd S = second_directional_fd(sub.local_map(u), u, a, b, fd) +
               gamma.eval(base, X, Y);
  // g-orthogonal projection off the tangent space
  MatrixXd G = g.gram(base, B);
  VectorXd rhs(B.cols());
  for (int i = 0; i < B.cols(); ++i) rhs[i] = g.eval(base, B.col(i), S);
  VectorXd coef = G.ldlt().solve(rhs);
  return S - B * coef;
}

VectorXd covariant_hessian(const MapHandle& map, const ChristoffelHandle& gamma_src,
                           const ChristoffelHandle& gamma_tgt, const VectorXd& point,
                           const VectorXd& X, const VectorXd& Y, const FdConfig& fd) {
  MapRn local = map.local(point);
  VectorXd d2 = second_directional_fd(local, point, X, Y, fd);
  MatrixXd D = jacobian_fd(local, point, fd);
  VectorXd base_t = local(point);
  VectorXd out = d2 + gamma_tgt.eval(base_t, D * X, D * Y) - D * gamma_src.eval(point, X, Y);
  return out;
}

double gauss_sectional(const SubmanifoldSampler& sub, const VectorXd& u, const VectorXd& X,
                       const VectorXd& Y, const FdConfig& fd,
                       const std::function<double(const VectorXd&, const VectorXd&,
                                                  const VectorXd&)>& ambient_sec) {
  VectorXd ex = X / X.norm();
  VectorXd ey = Y - ex * ex.dot(Y);
  double gram = X.squaredNorm() * Y.squaredNorm() - std::pow(X.dot(Y), 2);
  if (!(gram > 1e-6 * X.squaredNorm() * Y.squaredNorm()))
    throw std::invalid_argument("degenerate 2-plane");
  ey /= ey.norm();
  VectorXd iixx = second_fundamental_form(sub, u, ex, ex, fd);
  VectorXd iiyy = second_fundamental_form(sub, u, ey, ey, fd);
  VectorXd iixy = second_fundamental_form(sub, u, ex, ey, fd);
  double amb = 0.0;
  if (ambient_sec) amb = ambient_sec(sub.map(u), ex, ey);
  return amb + iixx.dot(iiyy) - iixy.squaredNorm();
}

double induced_riemann_sectional(const SubmanifoldSampler& sub, const VectorXd& u,
                                 const VectorXd& Xp, const VectorXd& Yp,
                                 const FdConfig& fd) {
  const int k = sub.param_dim;
  auto metric = [&sub, &fd, k](const VectorXd& q) {
    MatrixXd B = sub.tangent_basis(q, fd);
    return MatrixXd(B.transpose() * B);
  };
  double h = 1e-4 * std::max(1.0, u.lpNorm<Eigen::Infinity>());
  auto christoffel = [&metric, k, h](const VectorXd& q) {
    std::vector<MatrixXd> dG(static_cast<size_t>(k));
    for (int l = 0; l < k; ++l) {
      VectorXd qp = q, qm = q;
      qp[l] += h;
      qm[l] -= h;
      dG[static_cast<size_t>(l)] = (metric(qp) - metric(qm)) / (2 * h);
    }
    MatrixXd Ginv = metric(q).inverse();
    // gamma[l](i,j)
    std::vector<MatrixXd> gam(static_cast<size_t>(k), MatrixXd::Zero(k, k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l) {
          double lower = 0.5 * (dG[static_cast<size_t>(i)](j, l) +
                                dG[static_cast<size_t>(j)](i, l) -
                                dG[static_cast<size_t>(l)](i, j));
          for (int m = 0; m < k; ++m) gam[static_cast<size_t>(m)](i, j) += Ginv(m, l) * lower;
        }
    return gam;
  };

  double h2 = 10.0 * h;
  std::vector<std::vector<MatrixXd>> dgam(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    VectorXd qp = u, qm = u;
    qp[i] += h2;
    qm[i] -= h2;
    auto gp = christoffel(qp);
    auto gm = christoffel(qm);
    dgam[static_cast<size_t>(i)].resize(static_cast<size_t>(k));
    for (int l = 0; l < k; ++l)
      dgam[static_cast<size_t>(i)][static_cast<size_t>(l)] =
          (gp[static_cast<size_t>(l)] - gm[static_cast<size_t>(l)]) / (2 * h2);
  }
  auto gam = christoffel(u);
  MatrixXd G = metric(u);

  // R^l_{ijk} = d_i gam^l_{jk} - d_j gam^l_{ik} + gam^l_{im} gam^m_{jk}
  //             - gam^l_{jm} gam^m_{ik}
  auto riem = [&](int i, int j, int kk, int l) {
    double r = dgam[static_cast<size_t>(i)][static_cast<size_t>(l)](j, kk) -
               dgam[static_cast<size_t>(j)][static_cast<size_t>(l)](i, kk);
    for (int m = 0; m < k; ++m)
      r += gam[static_cast<size_t>(l)](i, m) * gam[static_cast<size_t>(m)](j, kk) -
           gam[static_cast<size_t>(l)](j, m) * gam[static_cast<size_t>(m)](i, kk);
    return r;
  };

  double num = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int kk = 0; kk < k; ++kk)
        for (int l = 0; l < k; ++l)
          for (int m = 0; m < k; ++m)
            num += G(l, m) * riem(i, j, kk, m) * Xp[i] * Yp[j] * Yp[kk] * Xp[l];

  double xx = Xp.dot(G * Xp), yy = Yp.dot(G * Yp), xy = Xp.dot(G * Yp);
  double denom = xx * yy - xy * xy;
  if (!(denom > 1e-12)) throw std::invalid_argument("degenerate 2-plane");
  return num / denom;
}

double totally_real_angle(const SubmanifoldSampler& sub, const VectorXd& u,
                          const ComplexStructureHandle& J, const MetricHandle& g,
                          const FdConfig& fd) {
  VectorXd base = sub.map(u);
  MatrixXd B = sub.tangent_basis(u, fd);
  MatrixXd P = B;
  if (!g_orthonormalize(g, base, P))
    throw std::invalid_argument("degenerate tangent basis");
  MatrixXd Q(B.rows(), B.cols());
  for (int i = 0; i < B.cols(); ++i) Q.col(i) = J.apply(base, B.col(i));
  if (!g_orthonormalize(g, base, Q))
    throw std::invalid_argument("degenerate J-image basis");
  MatrixXd C(P.cols(), Q.cols());
  for (int i = 0; i < P.cols(); ++i)
    for (int j = 0; j < Q.cols(); ++j) C(i, j) = g.eval(base, P.col(i), Q.col(j));
  double smax = C.jacobiSvd().singularValues()[0];
  return std::acos(std::clamp(smax, 0.0, 1.0));
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace

StokesResult stokes_check(const MapRn& disc, const FormHandle& form,
                          const OneFormHandle& primitive, int quad) {
  FdConfig fd;
  auto pullback_area = [&](double s, double t) {
    VectorXd u(2);
    u << s, t;
    VectorXd base = disc(u);
    MatrixXd D = jacobian_fd(disc, u, fd);
    return form.eval(base, D.col(0), D.col(1));
  };
  // tensor Simpson over the square
  auto inner = [&](double s) {
    return simpson([&](double t) { return pullback_area(s, t); }, 0.0, 1.0, quad);
  };
  StokesResult r;
  r.interior = simpson(inner, 0.0, 1.0, quad);

  auto edge = [&](const Eigen::Vector2d& start, const Eigen::Vector2d& dir) {
    return simpson(
        [&](double tau) {
          VectorXd u = VectorXd(start + tau * dir);
          VectorXd base = disc(u);
          MatrixXd D = jacobian_fd(disc, u, fd);
          return primitive.eval(base, D * VectorXd(dir));
        },
        0.0, 1.0, 8 * quad);
  };
  // boundary of the unit square, positively oriented
  r.boundary = edge({0, 0}, {1, 0}) + edge({1, 0}, {0, 1}) + edge({1, 1}, {-1, 0}) +
               edge({0, 1}, {0, -1});
  return r;
}

double ii_norm_estimate(const SubmanifoldSampler& sub, const VectorXd& u, int samples,
                        std::uint64_t seed, const FdConfig& fd) {
  MatrixXd B = sub.tangent_basis(u, fd);
  // Euclidean orthonormal tangent frame
  Eigen::HouseholderQR<MatrixXd> qr(B);
  MatrixXd Q = qr.householderQ() * MatrixXd::Identity(B.rows(), B.cols());
  double best = 0.0;
  auto probe = [&](const VectorXd& X, const VectorXd& Y) {
    best = std::max(best, second_fundamental_form(sub, u, X, Y, fd).norm());
  };
  for (int i = 0; i < Q.cols(); ++i)
    for (int j = i; j < Q.cols(); ++j) probe(Q.col(i), Q.col(j));
  auto rng = cell_rng(seed, 0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    VectorXd a(Q.cols()), b(Q.cols());
    for (int k = 0; k < Q.cols(); ++k) {
      a[k] = gauss(rng);
      b[k] = gauss(rng);
    }
    VectorXd X = Q * (a / a.norm());
    VectorXd Y = Q * (b / b.norm());
    probe(X, Y);
  }
  return best;
}

}  // namespace conifold
