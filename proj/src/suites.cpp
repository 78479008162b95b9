#include "conifold/suites.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "conifold/parallel.hpp"
#include "conifold/rng.hpp"

namespace conifold {

void RunConfig::validate() const {
  if (n_t < 2 || n_theta < 2 || n_r < 2)
    throw std::invalid_argument("grid counts must be >= 2");
  if (!(r_min > 0)) throw std::invalid_argument("r_min must be > 0");
  if (!(r_max > r_min)) throw std::invalid_argument("r_max must exceed r_min");
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("eps must lie in (0, 1)");
  (void)parse_knot_spec(knot);
}

GridSpec RunConfig::ct_grid() const {
  GridSpec g;
  g.axes = {GridAxis{0.0, 2.0 * M_PI, n_t, true}, GridAxis{0.0, 2.0 * M_PI, n_theta, true},
            GridAxis{r_min, r_max, n_r, false}};
  return g;
}

ordered_json RunConfig::to_json() const {
  ordered_json j;
  j["knot"] = knot;
  j["eps"] = eps;
  j["grid"] = {n_t, n_theta, n_r};
  j["r_range"] = {r_min, r_max};
  j["seed"] = seed;
  j["tube_radius"] = tube_radius;
  if (!fixture.empty()) j["fixture"] = fixture;
  j["tolerances"] = {{"identity", tol.identity},
                     {"first_deriv", tol.first_deriv},
                     {"second_deriv", tol.second_deriv}};
  return j;
}

RunConfig RunConfig::from_json(const ordered_json& j) {
  RunConfig c;
  c.knot = j.value("knot", c.knot);
  c.eps = j.value("eps", c.eps);
  if (j.contains("grid")) {
    c.n_t = j["grid"].at(0);
    c.n_theta = j["grid"].at(1);
    c.n_r = j["grid"].at(2);
  }
  if (j.contains("r_range")) {
    c.r_min = j["r_range"].at(0);
    c.r_max = j["r_range"].at(1);
  }
  c.seed = j.value("seed", c.seed);
  c.tube_radius = j.value("tube_radius", c.tube_radius);
  c.fixture = j.value("fixture", c.fixture);
  if (j.contains("tolerances")) {
    const auto& t = j["tolerances"];
    c.tol.identity = t.value("identity", c.tol.identity);
    c.tol.first_deriv = t.value("first_deriv", c.tol.first_deriv);
    c.tol.second_deriv = t.value("second_deriv", c.tol.second_deriv);
  }
  return c;
}

std::shared_ptr<const FrameField> field_for(const RunConfig& cfg) {
  return make_frame_field(parse_knot_spec(cfg.knot));
}

std::shared_ptr<const PerturbationField> perturbation_for(const RunConfig& cfg) {
  PerturbationFieldConfig pc;
  pc.tube_radius = cfg.tube_radius;
  pc.plateau_lo = 0.5 * cfg.eps;
  pc.plateau_hi = 2.0 * std::sqrt(cfg.r_max * cfg.r_max + 1.0);
  return std::make_shared<const PerturbationField>(parse_knot_spec(cfg.knot), pc);
}

// shell of |x| over which the field Jacobian norm is measured and the taming
// ratio is sampled; the plateau covers it for every eps in (0,1)
constexpr double kSigmaShellLo = 0.75;
constexpr double kSigmaShellHi = 1.5;

namespace {

ConormalCoords random_coords(std::mt19937_64& rng, double fiber = 1.5) {
  return {uniform(rng, 0, 2 * M_PI), uniform(rng, -fiber, fiber), uniform(rng, -fiber, fiber)};
}

VectorXd random_gaussian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  VectorXd v(n);
  for (int k = 0; k < n; ++k) v[k] = gauss(rng);
  return v;
}

/// random point of the field's tube shell paired with a cotangent fiber value
VectorXd random_shell_point(std::mt19937_64& rng, const FrameField& field,
                            const PerturbationField& pf) {
  double t = uniform(rng, 0, 2 * M_PI);
  Frame fr = field.at(t);
  Eigen::Vector3d wd(uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
  if (wd.norm() < 1e-9) wd << 1, 0, 0;
  wd.normalize();
  double d = uniform(rng, 0, 1.3 * pf.tube_radius());
  Vec4 n4 = wd[0] * fr.tau + wd[1] * fr.p1 + wd[2] * fr.p2;
  Vec4 u4 = std::cos(d) * fr.k + std::sin(d) * n4;
  double s = uniform(rng, kSigmaShellLo, kSigmaShellHi);
  VectorXd base(8);
  Vec4 p;
  for (int k = 0; k < 4; ++k) p[k] = uniform(rng, -0.3, 0.3);
  base << s * u4, p;
  return base;
}

struct RatioScan {
  double inf_ratio = 0.0, sup_ratio = 0.0, sigma_pointwise = 0.0;
  std::int64_t samples = 0;
};

/// taming ratios of the pushforward form and the pointwise field-Jacobian
/// max over the same sample set
RatioScan pushforward_ratio_scan(const FrameField& field, const PerturbationField& pf,
                                 double eps, std::int64_t n, std::uint64_t seed) {
  std::vector<double> ratios(static_cast<size_t>(n));
  std::vector<double> norms(static_cast<size_t>(n));
  parallel_chunks(n, [&](std::int64_t lo, std::int64_t hi, int) {
    for (std::int64_t i = lo; i < hi; ++i) {
      auto rng = cell_rng(seed, static_cast<std::uint64_t>(i));
      VectorXd base = random_shell_point(rng, field, pf);
      VectorXd X = random_gaussian(rng, 8);
      Mat4 D = pf.jacobian(base.head<4>());
      Vec4 a = X.head<4>(), b = X.tail<4>();
      // omega(DPhi^{-1} X, DPhi^{-1} JX) with JX = (-b, a)
      double val = a.dot(Vec4(a + eps * (D * b))) + b.dot(Vec4(b - eps * (D * a)));
      ratios[static_cast<size_t>(i)] = val / X.squaredNorm();
      norms[static_cast<size_t>(i)] = D.jacobiSvd().singularValues()[0];
    }
  });
  RatioScan r;
  r.samples = n;
  r.inf_ratio = *std::min_element(ratios.begin(), ratios.end());
  r.sup_ratio = *std::max_element(ratios.begin(), ratios.end());
  r.sigma_pointwise = *std::max_element(norms.begin(), norms.end());
  return r;
}

double effective_two_point_c(const TwoPointResult& t) {
  if (t.censored > 0) return std::numeric_limits<double>::infinity();
  return t.empirical_c;
}

}  // namespace

double conormal_liouville_max(const FrameField& field, int samples, std::uint64_t seed) {
  return parallel_max(samples, [&](std::int64_t i) {
    auto rng = cell_rng(seed, static_cast<std::uint64_t>(i));
    auto basis = conormal_tangent_basis(field, 0.0, random_coords(rng));
    double m = 0;
    for (const auto& b : basis) m = std::max(m, std::abs(liouville_eval(b)) / b.d.norm());
    return m;
  });
}

double conormal_omega_max(const FrameField& field, int samples, std::uint64_t seed) {
  return parallel_max(samples, [&](std::int64_t i) {
    auto rng = cell_rng(seed, static_cast<std::uint64_t>(i));
    auto basis = conormal_tangent_basis(field, 0.0, random_coords(rng));
    double m = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        m = std::max(m, std::abs(omega_eval(basis[a], basis[b])) /
                            (basis[a].d.norm() * basis[b].d.norm()));
    return m;
  });
}

IsotropyMax feps_isotropy_max(const FrameField& field, double eps, int samples,
                              std::uint64_t seed) {
  double om = parallel_max(samples, [&](std::int64_t i) {
    auto rng = cell_rng(seed, static_cast<std::uint64_t>(i));
    ConormalCoords c = random_coords(rng);
    auto basis = conormal_tangent_basis(field, 0.0, c);
    PhasePoint q = conormal_point(field, c);
    double s = std::sqrt(q.p.squaredNorm() + eps * eps);
    std::array<Vec8, 3> mapped;
    for (int k = 0; k < 3; ++k) {
      Vec4 dx = basis[k].dx(), dp = basis[k].dp();
      Vec4 mx = s * dx + q.x * (q.p.dot(dp)) / s;
      mapped[static_cast<size_t>(k)] << mx, dp;
    }
    double m = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        const Vec8 &u = mapped[static_cast<size_t>(a)], &v = mapped[static_cast<size_t>(b)];
        double w = u.head<4>().dot(v.tail<4>()) - v.head<4>().dot(u.tail<4>());
        m = std::max(m, std::abs(w) / (u.norm() * v.norm()));
      }
    return m;
  });
  double jo = parallel_max(samples, [&](std::int64_t i) {
    auto rng = cell_rng(seed, static_cast<std::uint64_t>(i));
    ConormalCoords c = random_coords(rng);
    auto basis = conormal_tangent_basis(field, 0.0, c);
    PhasePoint q = conormal_point(field, c);
    double s = std::sqrt(q.p.squaredNorm() + eps * eps);
    std::array<Vec8, 3> mapped;
    for (int k = 0; k < 3; ++k) {
      Vec4 dx = basis[k].dx(), dp = basis[k].dp();
      Vec4 mx = s * dx + q.x * (q.p.dot(dp)) / s;
      mapped[static_cast<size_t>(k)] << mx, dp;
    }
    double m = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const Vec8 &u = mapped[static_cast<size_t>(a)], &v = mapped[static_cast<size_t>(b)];
        Vec8 ju;
        ju << -u.tail<4>(), u.head<4>();
        m = std::max(m, std::abs(ju.dot(v)) / (u.norm() * v.norm()));
      }
    return m;
  });
  return {om, jo};
}

double unknot_trace_deviation(const FrameField& field, double eps, const GridSpec& grid) {
  return parallel_max(grid.size(), [&](std::int64_t i) {
    VectorXd u = grid.at(i);
    ResolvedPoint rp = ct_point(field, eps, ConormalCoords::polar(u[0], u[1], u[2]));
    return std::abs(std::abs(rp.trace()) - 1.0);
  });
}

TraceRange ct_trace_range(const FrameField& field, double eps, const GridSpec& grid) {
  TraceRange r;
  r.lo = parallel_min(grid.size(), [&](std::int64_t i) {
    VectorXd u = grid.at(i);
    return std::abs(ct_point(field, eps, ConormalCoords::polar(u[0], u[1], u[2])).trace());
  });
  r.hi = parallel_max(grid.size(), [&](std::int64_t i) {
    VectorXd u = grid.at(i);
    return std::abs(ct_point(field, eps, ConormalCoords::polar(u[0], u[1], u[2])).trace());
  });
  return r;
}

TraceRange torus_trace_envelope(int m, int n, int sweep) {
  TraceRange r;
  r.lo = std::numeric_limits<double>::infinity();
  r.hi = 0.0;
  for (int i = 0; i < sweep; ++i) {
    double theta = 2.0 * M_PI * i / sweep;
    double v = std::abs(torus_trace(m, n, 0.0, theta));
    r.lo = std::min(r.lo, v);
    r.hi = std::max(r.hi, v);
  }
  return r;
}

MapRn make_conormal_disc(std::shared_ptr<const FrameField> field, std::uint64_t seed) {
  auto rng = cell_rng(seed, 7);
  double t0 = uniform(rng, 0, 2 * M_PI);
  double a0 = uniform(rng, -0.8, 0.8), b0 = uniform(rng, -0.8, 0.8);
  double ta = uniform(rng, 0.2, 0.8), ph1 = uniform(rng, 0, 2 * M_PI);
  double aa = uniform(rng, 0.2, 0.7), ph2 = uniform(rng, 0, 2 * M_PI);
  double ba = uniform(rng, 0.2, 0.7), ph3 = uniform(rng, 0, 2 * M_PI);
  // cone from an interior center onto a loop lying on the bundle
  Vec8 center = conormal_point(*field, {t0, a0 * 0.3, b0 * 0.3}).flat();
  center[4] += 0.15;  // push the apex off the bundle
  return [field, t0, a0, b0, ta, ph1, aa, ph2, ba, ph3, center](const VectorXd& su) {
    double s = su[0], u = su[1];
    ConormalCoords c{t0 + ta * std::sin(2 * M_PI * u + ph1),
                     a0 + aa * std::cos(2 * M_PI * u + ph2),
                     b0 + ba * std::sin(2 * M_PI * u + ph3)};
    Vec8 rim = conormal_point(*field, c).flat();
    return VectorXd(center + s * (rim - center));
  };
}

ScalingRange sr_scaling_range(const FrameField& field, double eps, double r, int paths,
                              std::uint64_t seed) {
  ScalingRange out;
  out.lo = std::numeric_limits<double>::infinity();
  out.hi = 0.0;
  double cx = std::sqrt((r * r + eps * eps) / (1.0 + eps * eps));
  for (int p = 0; p < paths; ++p) {
    auto rng = cell_rng(seed, static_cast<std::uint64_t>(p));
    double t = uniform(rng, 0, 2 * M_PI), th = uniform(rng, 0, 2 * M_PI);
    PhasePoint prev = contract_Feps(eps, conormal_point(field, ConormalCoords::polar(t, th, 1.0)));
    double len1 = 0, lenr = 0;
    for (int step = 0; step < 64; ++step) {
      t += uniform(rng, -0.12, 0.12);
      th += uniform(rng, -0.12, 0.12);
      PhasePoint q = contract_Feps(eps, conormal_point(field, ConormalCoords::polar(t, th, 1.0)));
      Vec4 dx = q.x - prev.x, dp = q.p - prev.p;
      len1 += std::sqrt(dx.squaredNorm() + dp.squaredNorm());
      lenr += std::sqrt(cx * cx * dx.squaredNorm() + r * r * dp.squaredNorm());
      prev = q;
    }
    if (len1 > 0) {
      out.lo = std::min(out.lo, lenr / len1);
      out.hi = std::max(out.hi, lenr / len1);
    }
  }
  return out;
}

// --- suites ------------------------------------------------------------------

namespace {

void append(Report& rep, CheckRecord rec) { rep.records.push_back(std::move(rec)); }

MatrixXd ct_base_points(const FrameField& field, double eps, const GridSpec& grid,
                        std::vector<int>* charts) {
  std::int64_t n = grid.size();
  MatrixXd pts(n, 10);
  if (charts) charts->assign(static_cast<size_t>(n), 0);
  for (std::int64_t i = 0; i < n; ++i) {
    VectorXd u = grid.at(i);
    ResolvedPoint rp = ct_point(field, eps, ConormalCoords::polar(u[0], u[1], u[2]));
    int chart = (std::abs(rp.line.v) >= std::abs(rp.line.u)) ? 0 : 1;
    complexd z = (chart == 0) ? rp.line.u / rp.line.v : rp.line.v / rp.line.u;
    VectorXd row(10);
    row[0] = z.real();
    row[1] = z.imag();
    for (int j = 0; j < 4; ++j) {
      row[2 + 2 * j] = rp.w[j].real();
      row[3 + 2 * j] = rp.w[j].imag();
    }
    pts.row(i) = row;
    if (charts) (*charts)[static_cast<size_t>(i)] = chart;
  }
  return pts;
}

Report suite_lagrangian(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify --suite lagrangian";
  auto field = field_for(cfg);

  double lmax = conormal_liouville_max(*field, 10000, cfg.seed);
  append(rep, CheckRecord::le("conormal/liouville-restriction", "exact-lagrangian-identity",
                              lmax, 1e-9, "10^4 fiber samples, eps=0"));
  double omax = conormal_omega_max(*field, 10000, cfg.seed + 1);
  append(rep, CheckRecord::le("conormal/omega-restriction", "exact-lagrangian-identity",
                              omax, 1e-9, "10^4 fiber samples, eps=0"));

  IsotropyMax iso = feps_isotropy_max(*field, cfg.eps, 4096, cfg.seed + 2);
  append(rep, CheckRecord::le("contraction/omega-isotropy", "regularized-contraction-isotropy",
                              iso.omega_max, 1e-9, "contracted tangent pairs"));
  append(rep, CheckRecord::le("contraction/j-orthogonality",
                              "regularized-contraction-isotropy", iso.j_orth_max, 1e-9,
                              "J image against tangent pairs"));

  auto pf = perturbation_for(cfg);
  FormHandle omega_tilde = make_omega_tilde(pf, cfg.eps);
  GridSpec grid = cfg.ct_grid();
  SubmanifoldSampler ct = ct_sampler(field, cfg.eps, grid);
  RestrictionResult rr = form_restriction_max(omega_tilde, ct, make_metric_resolved());
  rep.excluded_samples += rr.excluded;
  append(rep, CheckRecord::le("transition/omega-tilde-restriction",
                              "transited-bundle-lagrangian", rr.max_abs, 1e-7,
                              "transported form on transited tangents"));
  append(rep, CheckRecord::le("transition/excluded-fraction", "sampler-health",
                              double(rr.excluded) / double(std::max<std::int64_t>(rr.count, 1)),
                              1e-3));

  if (field->knot().name() == "unknot") {
    GridSpec og;
    og.axes = {GridAxis{0, 2 * M_PI, 32, true}, GridAxis{0, 2 * M_PI, 32, true},
               GridAxis{0.25, 2.0, 6, false}};
    RestrictionResult orr =
        form_restriction_max(make_omega_resolved(), ct_unknot_oracle_sampler(og),
                             make_metric_resolved());
    append(rep, CheckRecord::le("transition/oracle-restriction",
                                "closed-form-transited-unknot-lagrangian", orr.max_abs, 1e-8,
                                "product form on the closed-form surface"));
  }

  // taming ratios of the transported form stay positive on the outer grid
  GridSpec outer = cfg.ct_grid();
  outer.axes[2].lo = std::max(1.0, cfg.r_min);
  outer.axes[0].n = std::min(cfg.n_t, 16);
  outer.axes[1].n = std::min(cfg.n_theta, 16);
  outer.axes[2].n = std::min(cfg.n_r, 4);
  std::vector<int> charts;
  MatrixXd bases = ct_base_points(*field, cfg.eps, outer, &charts);
  TangentSpaceFn tangent = [&bases, &charts](const VectorXd& b) {
    for (int i = 0; i < bases.rows(); ++i)
      if ((bases.row(i).transpose() - b).norm() < 1e-12)
        return resolved_tangent_basis(b, charts[static_cast<size_t>(i)]);
    return resolved_tangent_basis(b, 0);
  };
  TamenessResult tam = tameness_bounds(omega_tilde, make_J_resolved(), make_metric_resolved(),
                                       bases, tangent, 6, cfg.seed + 3);
  append(rep, CheckRecord::ge("transition/taming-inf", "transited-form-tame",
                              tam.inf_ratio, 1e-6, "sampled over |p| >= 1"));
  append(rep, CheckRecord::le("transition/taming-sup", "transited-form-tame",
                              tam.sup_ratio, 1e3, "sampled over |p| >= 1"));
  return rep;
}

Report suite_tame(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify --suite tame";
  auto field = field_for(cfg);
  auto pf = perturbation_for(cfg);

  auto meas = pf->measure_jacobian_norm(kSigmaShellLo, kSigmaShellHi, cfg.seed);
  RatioScan scan = pushforward_ratio_scan(*field, *pf, cfg.eps, 100000, cfg.seed + 11);
  double sigma = std::max(meas.sigma, scan.sigma_pointwise);
  double inf_ratio = scan.inf_ratio, sup_ratio = scan.sup_ratio;

  append(rep, CheckRecord::le("perturbation/field-jacobian-norm", "field-jacobian-measured",
                              sigma, 1e6,
                              "shell |x| in [" + std::to_string(kSigmaShellLo) + ", " +
                                  std::to_string(kSigmaShellHi) + "], " +
                                  std::to_string(meas.samples + scan.samples) + " samples"));
  if (!(cfg.eps < 1.0 / sigma)) {
    append(rep, CheckRecord::le("pushforward/admissible-eps", "taming-requires-eps-below-1/sigma",
                                cfg.eps, 1.0 / sigma, "refused: eps >= 1/sigma"));
    return rep;
  }
  append(rep, CheckRecord::le("pushforward/admissible-eps", "taming-requires-eps-below-1/sigma",
                              cfg.eps, 1.0 / sigma));
  append(rep, CheckRecord::ge("pushforward/taming-inf", "pushforward-taming-bound", inf_ratio,
                              1.0 - cfg.eps * sigma - 1e-6, "10^5 point-direction samples"));
  append(rep, CheckRecord::le("pushforward/taming-sup", "pushforward-taming-bound", sup_ratio,
                              1.0 + cfg.eps * sigma + 1e-6, "10^5 point-direction samples"));

  // the untransported structure is tame with constant one
  MatrixXd std_bases(64, 8);
  {
    auto rng = cell_rng(cfg.seed + 4, 0);
    for (int i = 0; i < std_bases.rows(); ++i)
      std_bases.row(i) = random_gaussian(rng, 8).transpose();
  }
  TamenessResult std_tam = tameness_bounds(make_omega_xp(), make_J_standard(),
                                           make_euclidean(8), std_bases, nullptr, 16,
                                           cfg.seed + 5);
  append(rep, CheckRecord::within("standard/taming-inf", "standard-structure-constant-one",
                                  std_tam.inf_ratio, 1 - 1e-10, 1 + 1e-10));
  append(rep, CheckRecord::within("standard/taming-sup", "standard-structure-constant-one",
                                  std_tam.sup_ratio, 1 - 1e-10, 1 + 1e-10));
  return rep;
}

SubmanifoldSampler cone_shell_sampler(double R, int nz, int ns, int nphi) {
  // (z_re, z_im, s, phi1, phi2, phi3): fiber scaled so |w| = R + s
  SubmanifoldSampler smp;
  smp.name = "cone_shell";
  smp.param_dim = 6;
  smp.ambient_dim = 8;
  smp.grid.axes = {GridAxis{-0.7, 0.7, nz, false},       GridAxis{-0.7, 0.7, nz, false},
                   GridAxis{0.0, R, ns, false},          GridAxis{0.3, M_PI - 0.3, nphi, false},
                   GridAxis{0.3, M_PI - 0.3, nphi, false}, GridAxis{0.0, 2 * M_PI, nphi, true}};
  smp.map = [R](const VectorXd& u) {
    complexd z(u[0], u[1]);
    double rho = (R + u[2]) / std::sqrt(1.0 + std::norm(z));
    double a = u[3], b = u[4], c = u[5];
    ChartPoint cp;
    cp.chart = 1;
    cp.z = z;
    cp.xi = rho * complexd(std::cos(a), std::sin(a) * std::cos(b));
    cp.eta = rho * std::sin(a) * std::sin(b) * complexd(std::cos(c), std::sin(c));
    return real_of_w(cone_chart_embed(cp));
  };
  (void)ns;
  return smp;
}

Report suite_bilipschitz(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify --suite bilipschitz";

  for (double R : {0.5, 1.0, 2.0}) {
    SubmanifoldSampler shell = cone_shell_sampler(R, 4, 3, 4);
    BilipschitzResult b = bilipschitz_bounds(make_lift_map(), make_euclidean(8),
                                             make_metric_resolved(), shell);
    rep.excluded_samples += b.excluded;
    std::string tag = "R=" + std::to_string(R);
    append(rep, CheckRecord::ge("lift/bilipschitz-min@" + tag, "lift-bilipschitz-constant",
                                b.min_eig, 1.0 - 1e-6, tag));
    append(rep, CheckRecord::le("lift/bilipschitz-max@" + tag, "lift-bilipschitz-constant",
                                b.max_eig, 1.0 + 2.0 / (R * R) + 1e-6, tag));
  }

  for (double R : {1.0, 2.0, 5.0}) {
    SubmanifoldSampler shell = cone_shell_sampler(R, 4, 3, 4);
    BilipschitzResult b = bilipschitz_bounds(make_lift_trace_map(), make_euclidean(8),
                                             make_fs_metric(), shell);
    append(rep, CheckRecord::le("lift/fs-pullback-eigen@R=" + std::to_string(R),
                                "fs-pullback-eigen-bound", b.max_eig, 2.0 / (R * R) + 1e-6));
  }

  {
    GridSpec g;
    g.axes = {GridAxis{-0.85, 0.85, 4, false}, GridAxis{-0.85, 0.85, 4, false},
              GridAxis{0.25, 1.5, 3, false},   GridAxis{-1.0, 1.0, 3, false},
              GridAxis{-1.2, 1.2, 3, false},   GridAxis{-1.2, 1.2, 3, false}};
    SubmanifoldSampler box = box_sampler(g, "cone_chart_domain");
    BilipschitzResult b = bilipschitz_bounds(make_cone_chart_map(1), make_cone_metric(),
                                             make_euclidean(8), box);
    append(rep, CheckRecord::ge("cone-chart/bilipschitz-min", "cone-chart-bilipschitz",
                                b.min_eig, 1.0 / 20.0 - 1e-6));
    append(rep, CheckRecord::le("cone-chart/bilipschitz-max", "cone-chart-bilipschitz",
                                b.max_eig, 20.0 + 1e-6));
  }

  {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int c = 0; c < 8; ++c) {
      auto rng = cell_rng(cfg.seed + 21, static_cast<std::uint64_t>(c));
      VectorXd center(6);
      center << uniform(rng, -0.8, 0.8), uniform(rng, -0.8, 0.8), 0, 0, 0, 0;
      double scale = uniform(rng, 3.0, 10.0);
      VectorXd dir = random_gaussian(rng, 4);
      center.tail(4) = scale * dir / dir.norm();
      GridSpec g;
      for (int d = 0; d < 6; ++d) g.axes.push_back(GridAxis{-0.4, 0.4, 3, false});
      BilipschitzResult b = bilipschitz_bounds(make_ball_chart_map(center),
                                               make_euclidean(6), make_ball_metric(),
                                               box_sampler(g, "unit_ball"));
      lo = std::min(lo, b.min_eig);
      hi = std::max(hi, b.max_eig);
    }
    append(rep, CheckRecord::ge("ball-chart/bilipschitz-min", "ball-chart-bilipschitz", lo,
                                0.25 - 1e-6, "centers with |(xi0,eta0)| >= 3"));
    append(rep, CheckRecord::le("ball-chart/bilipschitz-max", "ball-chart-bilipschitz", hi,
                                4.0 + 1e-6, "centers with |(xi0,eta0)| >= 3"));
  }

  {
    // identity sanity
    GridSpec g;
    for (int d = 0; d < 3; ++d) g.axes.push_back(GridAxis{-1, 1, 3, false});
    MapHandle ident;
    ident.name = "identity";
    ident.src_dim = ident.tgt_dim = 3;
    ident.apply = [](const VectorXd& u) { return u; };
    BilipschitzResult b = bilipschitz_bounds(ident, make_euclidean(3), make_euclidean(3),
                                             box_sampler(g, "cube"));
    append(rep, CheckRecord::within("identity/bilipschitz", "identity-map-constant-one",
                                    b.max_eig, 1 - 1e-10, 1 + 1e-10));
  }
  return rep;
}

Report suite_curvature(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify --suite curvature";
  FdConfig fd;

  auto sphere_grid = [] {
    GridSpec g;
    g.axes = {GridAxis{0.6, M_PI - 0.6, 4, false}, GridAxis{0.6, M_PI - 0.6, 4, false},
              GridAxis{0.0, 2 * M_PI, 5, true}};
    return g;
  }();

  auto sec_fixture = [&](const SubmanifoldSampler& smp, double expect,
                         std::uint64_t seed) {
    double worst = 0;
    for (std::int64_t i = 0; i < smp.grid.size(); ++i) {
      VectorXd u = smp.grid.at(i);
      MatrixXd B = smp.tangent_basis(u, fd);
      auto rng = cell_rng(seed, static_cast<std::uint64_t>(i));
      std::normal_distribution<double> gauss(0, 1);
      VectorXd a(B.cols()), b(B.cols());
      for (int k = 0; k < B.cols(); ++k) {
        a[k] = gauss(rng);
        b[k] = gauss(rng);
      }
      double sec = gauss_sectional(smp, u, B * a, B * b, fd);
      worst = std::max(worst, std::abs(sec - expect));
    }
    return worst;
  };

  bool all = cfg.fixture.empty();
  if (all || cfg.fixture == "s3") {
    double worst = sec_fixture(sphere3_sampler(1.0, sphere_grid), 1.0, cfg.seed);
    append(rep, CheckRecord::le("curvature/unit-sphere", "sphere-sectional-curvature", worst,
                                1e-4, "|sec - 1| over sampled planes"));
  }
  if (all || cfg.fixture == "sphere2") {
    double worst = sec_fixture(sphere3_sampler(2.0, sphere_grid), 0.25, cfg.seed + 1);
    append(rep, CheckRecord::le("curvature/radius-2-sphere", "sphere-sectional-curvature",
                                worst, 1e-4, "|sec - 1/4| over sampled planes"));
  }
  if (all || cfg.fixture == "clifford") {
    GridSpec g;
    g.axes = {GridAxis{0, 2 * M_PI, 6, true}, GridAxis{0, 2 * M_PI, 6, true}};
    double worst = sec_fixture(clifford_sampler(g), 0.0, cfg.seed + 2);
    append(rep, CheckRecord::le("curvature/clifford-torus", "flat-torus-curvature", worst,
                                1e-4, "|sec| over sampled planes"));
  }
  if (!all) return rep;

  {
    // Gauss route against the induced-metric Riemann route
    SubmanifoldSampler smp = sphere3_sampler(1.0, sphere_grid);
    double worst = 0;
    for (int i = 0; i < 12; ++i) {
      auto rng = cell_rng(cfg.seed + 3, static_cast<std::uint64_t>(i));
      VectorXd u(3);
      u << uniform(rng, 0.7, M_PI - 0.7), uniform(rng, 0.7, M_PI - 0.7),
          uniform(rng, 0, 2 * M_PI);
      VectorXd xp(3), yp(3);
      std::normal_distribution<double> gauss(0, 1);
      for (int k = 0; k < 3; ++k) {
        xp[k] = gauss(rng);
        yp[k] = gauss(rng);
      }
      MatrixXd B = smp.tangent_basis(u, fd);
      double g1 = gauss_sectional(smp, u, B * xp, B * yp, fd);
      double g2 = induced_riemann_sectional(smp, u, xp, yp, fd);
      worst = std::max(worst, std::abs(g1 - g2));
    }
    append(rep, CheckRecord::le("curvature/gauss-riemann-cross-check",
                                "gauss-equation-consistency", worst, 1e-3));
  }

  {
    // normalization of the projective factor: round sphere of radius 1/2
    SubmanifoldSampler s2;
    s2.name = "sphere2_half";
    s2.param_dim = 2;
    s2.ambient_dim = 3;
    s2.grid.axes = {GridAxis{0.6, M_PI - 0.6, 4, false}, GridAxis{0, 2 * M_PI, 5, true}};
    s2.map = [](const VectorXd& u) {
      VectorXd x(3);
      x << 0.5 * std::sin(u[0]) * std::cos(u[1]), 0.5 * std::sin(u[0]) * std::sin(u[1]),
          0.5 * std::cos(u[0]);
      return x;
    };
    double worst = sec_fixture(s2, 4.0, cfg.seed + 4);
    append(rep, CheckRecord::le("curvature/projective-factor-constant",
                                "projective-line-curvature-four", worst, 1e-3));
  }

  {
    // second fundamental form of the cone against the c / delta^2 envelope
    double prev = std::numeric_limits<double>::infinity();
    for (double delta : {1.0, 2.0, 4.0, 8.0}) {
      SubmanifoldSampler cone = cone_embed_sampler(GridSpec{});
      double m = 0;
      for (int i = 0; i < 24; ++i) {
        auto rng = cell_rng(cfg.seed + 5, static_cast<std::uint64_t>(i));
        complexd z(uniform(rng, -0.6, 0.6), uniform(rng, -0.6, 0.6));
        double rho = delta / std::sqrt(1 + std::norm(z));
        double a = uniform(rng, 0.4, M_PI - 0.4), b = uniform(rng, 0.4, M_PI - 0.4),
               c = uniform(rng, 0, 2 * M_PI);
        VectorXd u(6);
        complexd xi = rho * complexd(std::cos(a), std::sin(a) * std::cos(b));
        complexd eta = rho * std::sin(a) * std::sin(b) * complexd(std::cos(c), std::sin(c));
        u << z.real(), z.imag(), xi.real(), xi.imag(), eta.real(), eta.imag();
        m = std::max(m, ii_norm_estimate(cone, u, 24, cfg.seed + 6, fd));
      }
      append(rep, CheckRecord::le("curvature/cone-ii-envelope@delta=" + std::to_string(delta),
                                  "cone-second-fundamental-form-envelope", m * delta * delta,
                                  100.0, "max |II| * delta^2"));
      append(rep, CheckRecord::le("curvature/cone-ii-trend@delta=" + std::to_string(delta),
                                  "cone-second-fundamental-form-decay", m, prev + 1e-9,
                                  "nonincreasing in delta"));
      prev = m;
    }
  }

  {
    // composition identity for the embedded image of a chart surface
    SubmanifoldSampler surf;
    surf.name = "chart_surface";
    surf.param_dim = 2;
    surf.ambient_dim = 6;
    surf.grid.axes = {GridAxis{-0.5, 0.5, 3, false}, GridAxis{-0.5, 0.5, 3, false}};
    surf.map = [](const VectorXd& st) {
      double s = st[0], t = st[1];
      complexd z = 0.35 * complexd(s, t) + complexd(0.1, -0.05) * std::sin(s + t);
      complexd xi = complexd(1.1, 0.0) + 0.3 * complexd(std::cos(s), std::sin(2 * t));
      complexd eta = complexd(0.2, 0.8) + 0.25 * complexd(std::sin(t - s), std::cos(s));
      VectorXd u(6);
      u << z.real(), z.imag(), xi.real(), xi.imag(), eta.real(), eta.imag();
      return u;
    };
    MapHandle chart = make_cone_chart_map(1);
    SubmanifoldSampler image = surf;
    image.name = "chart_surface_image";
    image.ambient_dim = 8;
    image.map = [surf, chart](const VectorXd& st) { return chart.apply(surf.map(st)); };

    MetricHandle g_cone = make_cone_metric();
    ChristoffelHandle gamma = christoffel_of_metric(g_cone);
    ChristoffelHandle flat8 = christoffel_zero(8);
    double worst = 0;
    for (std::int64_t i = 0; i < surf.grid.size(); ++i) {
      VectorXd st = surf.grid.at(i);
      MatrixXd B = surf.tangent_basis(st, fd);
      VectorXd X = B.col(0), Y = B.col(1);
      VectorXd base = surf.map(st);
      MatrixXd D = jacobian_fd(chart.apply, base, fd);
      // left side: second fundamental form of the image surface
      VectorXd lhs = second_fundamental_form(image, st, D * X, D * Y, fd);
      // right side: transported II plus the covariant Hessian, projected
      VectorXd ii_src = second_fundamental_form_g(surf, st, X, Y, g_cone, gamma, fd);
      VectorXd hess = covariant_hessian(chart, gamma, flat8, base, X, Y, fd);
      VectorXd rhs = D * ii_src + hess;
      MatrixXd Bt = image.tangent_basis(st, fd);
      MatrixXd G = Bt.transpose() * Bt;
      VectorXd coef = G.ldlt().solve(Bt.transpose() * rhs);
      VectorXd rhs_normal = rhs - Bt * coef;
      worst = std::max(worst, (lhs - rhs_normal).norm());
    }
    append(rep, CheckRecord::le("curvature/hessian-composition", "ii-transport-identity",
                                worst, 1e-5));
  }

  {
    // nested-submanifold monotonicity along a knot
    KnotCurve k = torus_knot(2, 3);
    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 64; ++i) {
      double t = 2 * M_PI * i / 64;
      KnotCurve::Jet j = k.eval(t);
      Vec4 T = j.dk / j.dk.norm();
      Vec4 acc = j.ddk / j.dk.squaredNorm();
      Vec4 ii_r4 = acc - T * T.dot(acc);
      Vec4 ii_s3 = ii_r4 - j.k * j.k.dot(ii_r4);
      worst = std::max(worst, ii_s3.norm() - ii_r4.norm());
    }
    append(rep, CheckRecord::le("curvature/nested-ii-monotonicity",
                                "nested-second-fundamental-form", worst, 1e-6,
                                "|II in S3| <= |II in R4| pointwise"));
  }

  {
    // holomorphic Hessian entries of the trace component of the lift
    MapHandle phi1;
    phi1.name = "w1_over_w2";
    phi1.src_dim = 4;
    phi1.tgt_dim = 2;
    phi1.apply = [](const VectorXd& u) {
      complexd w1(u[0], u[1]), w2(u[2], u[3]);
      complexd r = w1 / w2;
      VectorXd out(2);
      out << r.real(), r.imag();
      return out;
    };
    VectorXd at(4);
    at << 0.0, 0.0, 1.0, 0.0;
    ChristoffelHandle flat4 = christoffel_zero(4);
    ChristoffelHandle flat2 = christoffel_zero(2);
    auto entry = [&](int i, int j) {
      VectorXd X = VectorXd::Zero(4), Y = VectorXd::Zero(4);
      X[i] = 1;
      Y[j] = 1;
      VectorXd h = covariant_hessian(phi1, flat4, flat2, at, X, Y, fd);
      return complexd(h[0], h[1]);
    };
    // holomorphic second derivatives read off real-direction stencils
    double worst = std::abs(entry(0, 0) - complexd(0, 0));
    worst = std::max(worst, std::abs(entry(0, 2) - complexd(-1, 0)));
    worst = std::max(worst, std::abs(entry(2, 0) - complexd(-1, 0)));
    worst = std::max(worst, std::abs(entry(2, 2) - complexd(0, 0)));
    append(rep, CheckRecord::le("curvature/lift-trace-hessian", "lift-hessian-entries", worst,
                                cfg.tol.second_deriv, "second derivatives at w = (0,1,.,.)"));
  }
  return rep;
}

Report suite_totally_real(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify --suite totally-real";
  auto field = field_for(cfg);
  GridSpec grid = cfg.ct_grid();
  SubmanifoldSampler ct = ct_sampler(field, cfg.eps, grid);
  double min_angle = parallel_min(grid.size(), [&](std::int64_t i) {
    VectorXd u = grid.at(i);
    return totally_real_angle(ct, u, make_J_resolved(), make_metric_resolved());
  });
  double bound = (field->knot().name() == "unknot" && std::abs(cfg.eps - 0.1) < 1e-12)
                     ? 0.05
                     : 1e-3;
  append(rep, CheckRecord::ge("transition/totally-real-angle", "transited-bundle-totally-real",
                              min_angle, bound, "min principal angle over the grid"));
  return rep;
}

Report suite_stokes(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify --suite stokes";
  auto field = field_for(cfg);
  FormHandle omega = make_omega_xp();
  OneFormHandle lambda = make_liouville();

  double worst_boundary = 0, worst_gap = 0;
  for (int d = 0; d < 20; ++d) {
    MapRn disc = make_conormal_disc(field, cfg.seed + static_cast<std::uint64_t>(d));
    StokesResult s = stokes_check(disc, omega, lambda, 96);
    worst_boundary = std::max(worst_boundary, std::abs(s.boundary));
    worst_gap = std::max(worst_gap, std::abs(s.interior - s.boundary));
  }
  append(rep, CheckRecord::le("stokes/conormal-boundary-integral", "primitive-vanishes-on-bundle",
                              worst_boundary, 1e-6, "20 random discs"));
  append(rep, CheckRecord::le("stokes/interior-boundary-gap", "stokes-identity", worst_gap,
                              1e-6, "20 random discs"));

  {
    // boundary on the zero section
    auto rng = cell_rng(cfg.seed, 99);
    double t0 = uniform(rng, 0, 2 * M_PI);
    Vec8 center = Vec8::Zero();
    center.head<4>() = field->knot().point(t0);
    center[6] += 0.4;
    auto knot = field->knot();
    MapRn disc = [knot, center](const VectorXd& su) {
      Vec8 rim = Vec8::Zero();
      rim.head<4>() = knot.point(2 * M_PI * su[1]);
      return VectorXd(center + su[0] * (rim - center));
    };
    StokesResult s = stokes_check(disc, omega, lambda, 96);
    append(rep, CheckRecord::le("stokes/zero-section-area", "vanishing-on-zero-section",
                                std::max(std::abs(s.interior), std::abs(s.boundary)), 1e-6));
  }

  {
    // generic disc: exactness only
    auto rng = cell_rng(cfg.seed, 123);
    Vec8 c0 = random_gaussian(rng, 8), c1 = random_gaussian(rng, 8),
         c2 = random_gaussian(rng, 8);
    MapRn disc = [c0, c1, c2](const VectorXd& su) {
      double s = su[0], u = su[1];
      Vec8 v = c0 + s * std::cos(2 * M_PI * u) * c1 + s * std::sin(2 * M_PI * u) * c2 +
               0.2 * s * s * c1.cwiseProduct(c2);
      return VectorXd(v);
    };
    StokesResult s = stokes_check(disc, omega, lambda, 96);
    append(rep, CheckRecord::le("stokes/generic-disc-exactness", "stokes-identity",
                                std::abs(s.interior - s.boundary), 1e-6));
  }
  return rep;
}

Report suite_two_point(const RunConfig& cfg) {
  Report rep;
  rep.command = "verify --suite two-point";
  auto field = field_for(cfg);

  {
    GridSpec g;
    g.axes = {GridAxis{0, 2 * M_PI, 24, true}, GridAxis{0, 2 * M_PI, 24, true},
              GridAxis{cfg.r_min, cfg.r_max, 6, false}};
    SubmanifoldSampler coarse_s = ct_mesh_sampler(field, cfg.eps, g);
    SampleMesh coarse = build_mesh(coarse_s, 12);
    append(rep, CheckRecord::within("two-point/mesh-connected", "mesh-connectivity",
                                    coarse.component_count, 1, 1));
    TwoPointResult tc = two_point_scan(coarse, 0.5, 8.0);
    append(rep, CheckRecord::le("two-point/transition-constant", "two-point-estimate",
                                effective_two_point_c(tc), 50.0,
                                "rho=0.5, pairs=" + std::to_string(tc.pairs)));
    SubmanifoldSampler fine_s = ct_mesh_sampler(field, cfg.eps, g.refined());
    SampleMesh fine = refine_mesh(fine_s, coarse, 12);
    TwoPointResult tf = two_point_scan(fine, 0.5, 8.0);
    double rel = std::abs(effective_two_point_c(tf) / effective_two_point_c(tc) - 1.0);
    append(rep, CheckRecord::le("two-point/refinement-stability", "two-point-estimate-stable",
                                rel, 0.10,
                                "coarse C=" + std::to_string(tc.empirical_c) +
                                    " fine C=" + std::to_string(tf.empirical_c)));
  }

  {
    // slice constants stable in the fiber radius (rho scales with the slice)
    double base_c = 0;
    double worst_rel = 0;
    for (double r : {1.0, 2.0, 4.0}) {
      GridSpec g;
      g.axes = {GridAxis{0, 2 * M_PI, 48, true}, GridAxis{0, 2 * M_PI, 48, true}};
      SampleMesh mesh = build_mesh(sr_slice_sampler(field, cfg.eps, r, g), 8);
      TwoPointResult t = two_point_scan(mesh, 0.4 * r, 8.0);
      double c = effective_two_point_c(t);
      if (r == 1.0)
        base_c = c;
      else
        worst_rel = std::max(worst_rel, std::abs(c / base_c - 1.0));
    }
    append(rep, CheckRecord::le("two-point/slice-stability", "slice-constants-uniform",
                                worst_rel, 0.10, "slices r in {1,2,4} against r=1"));
  }

  {
    ScalingRange sc2 = sr_scaling_range(*field, cfg.eps, 2.0, 24, cfg.seed);
    ScalingRange sc4 = sr_scaling_range(*field, cfg.eps, 4.0, 24, cfg.seed + 1);
    auto lo_bound = [&](double r) { return r * (1 - 2e-2); };
    auto hi_bound = [&](double r) { return std::sqrt(r * r + cfg.eps * cfg.eps) * (1 + 2e-2); };
    append(rep, CheckRecord::within("two-point/slice-scaling@r=2", "slice-dilation-bounds",
                                    sc2.lo, lo_bound(2.0), hi_bound(2.0)));
    append(rep, CheckRecord::within("two-point/slice-scaling-hi@r=2", "slice-dilation-bounds",
                                    sc2.hi, lo_bound(2.0), hi_bound(2.0)));
    append(rep, CheckRecord::within("two-point/slice-scaling@r=4", "slice-dilation-bounds",
                                    sc4.lo, lo_bound(4.0), hi_bound(4.0)));
    append(rep, CheckRecord::within("two-point/slice-scaling-hi@r=4", "slice-dilation-bounds",
                                    sc4.hi, lo_bound(4.0), hi_bound(4.0)));
  }

  {
    // compressed-graph fixture: the ratio grows without bound
    double prev = 0;
    bool growing = true;
    std::vector<double> cs;
    for (double lo : {1.0, 2.0, 3.0}) {
      SampleMesh mesh = build_mesh(sin_exp_graph_sampler(lo, lo + 1.0, 6000), 2);
      TwoPointResult t = two_point_scan(mesh, 0.5, 400.0);
      cs.push_back(t.empirical_c);
      if (t.empirical_c <= prev) growing = false;
      prev = t.empirical_c;
    }
    std::ostringstream det;
    det << "window ratios " << cs[0] << ", " << cs[1] << ", " << cs[2];
    append(rep, CheckRecord::ge("two-point/compressed-graph-growth",
                                "two-point-estimate-counterexample", growing ? 1.0 : 0.0, 1.0,
                                det.str()));
  }

  {
    SampleMesh mesh = build_mesh(circle_sampler(256), 2);
    TwoPointResult t = two_point_scan(mesh, 0.5);
    append(rep, CheckRecord::le("two-point/circle-constant", "arc-chord-ratio", t.empirical_c,
                                M_PI / 2 + 5e-2));
  }
  return rep;
}

}  // namespace

Report run_suite(const std::string& suite, const RunConfig& cfg) {
  cfg.validate();
  if (suite == "lagrangian") return suite_lagrangian(cfg);
  if (suite == "tame") return suite_tame(cfg);
  if (suite == "bilipschitz") return suite_bilipschitz(cfg);
  if (suite == "curvature") return suite_curvature(cfg);
  if (suite == "totally-real") return suite_totally_real(cfg);
  if (suite == "stokes") return suite_stokes(cfg);
  if (suite == "two-point") return suite_two_point(cfg);
  if (suite == "all") {
    Report rep;
    rep.command = "verify --suite all";
    for (const char* s : {"lagrangian", "tame", "bilipschitz", "curvature", "totally-real",
                          "stokes", "two-point"}) {
      Report sub = run_suite(s, cfg);
      rep.excluded_samples += sub.excluded_samples;
      for (auto& r : sub.records) rep.records.push_back(std::move(r));
    }
    return rep;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

Report report_constants(const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.command = "report-constants";
  auto field = field_for(cfg);
  auto pf = perturbation_for(cfg);

  auto meas = pf->measure_jacobian_norm(kSigmaShellLo, kSigmaShellHi, cfg.seed);
  double sigma = meas.sigma;
  append(rep, CheckRecord::le("constants/field-jacobian-norm", "field-jacobian-measured",
                              sigma, 1e6,
                              "shell [" + std::to_string(kSigmaShellLo) + ", " +
                                  std::to_string(kSigmaShellHi) + "]"));

  RatioScan scan = pushforward_ratio_scan(*field, *pf, cfg.eps, 20000, cfg.seed + 31);
  sigma = std::max(sigma, scan.sigma_pointwise);
  if (cfg.eps < 1.0 / sigma) {
    // measured taming constant of the pushforward against its predicted bound
    double taming_c = std::max(scan.sup_ratio, 1.0 / scan.inf_ratio);
    append(rep, CheckRecord::le("constants/taming", "pushforward-taming-constant", taming_c,
                                1.0 / (1.0 - cfg.eps * sigma) + 1e-3,
                                "measured over the sigma shell"));
  } else {
    append(rep, CheckRecord::le("constants/taming-admissible", "taming-requires-eps-below-1/sigma",
                                cfg.eps, 1.0 / sigma, "refused: eps >= 1/sigma"));
  }

  {
    double R = 2.0 * cfg.eps;
    SubmanifoldSampler shell = cone_shell_sampler(R, 4, 3, 4);
    BilipschitzResult b = bilipschitz_bounds(make_lift_map(), make_euclidean(8),
                                             make_metric_resolved(), shell);
    append(rep, CheckRecord::le("constants/lift-bilipschitz@R=2eps", "lift-bilipschitz-constant",
                                b.max_eig, 1.0 + 2.0 / (R * R) + 1e-6));
  }

  {
    GridSpec g;
    g.axes = {GridAxis{0, 2 * M_PI, 20, true}, GridAxis{0, 2 * M_PI, 20, true},
              GridAxis{cfg.r_min, cfg.r_max, 6, false}};
    SampleMesh mesh = build_mesh(ct_mesh_sampler(field, cfg.eps, g), 12);
    TwoPointResult t = two_point_scan(mesh, 0.5, 8.0);
    append(rep, CheckRecord::le("constants/two-point", "two-point-estimate",
                                effective_two_point_c(t), 50.0));
  }

  {
    GridSpec g = cfg.ct_grid();
    g.axes[0].n = std::min(cfg.n_t, 24);
    g.axes[1].n = std::min(cfg.n_theta, 24);
    g.axes[2].n = std::min(cfg.n_r, 6);
    SubmanifoldSampler ct = ct_sampler(field, cfg.eps, g);
    double min_angle = parallel_min(g.size(), [&](std::int64_t i) {
      return totally_real_angle(ct, g.at(i), make_J_resolved(), make_metric_resolved());
    });
    append(rep, CheckRecord::ge("constants/totally-real-angle", "transited-bundle-totally-real",
                                min_angle, 1e-3));
  }
  return rep;
}

std::int64_t ct_sample_csv(const RunConfig& cfg, std::ostream& os) {
  cfg.validate();
  auto field = field_for(cfg);
  GridSpec grid = cfg.ct_grid();
  os << "t,theta,r,u_re,u_im,v_re,v_im,w1_re,w1_im,w2_re,w2_im,w3_re,w3_im,w4_re,w4_im,"
        "trace_abs\n";
  char buf[64];
  auto put = [&](double v, bool last = false) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf << (last ? "\n" : ",");
  };
  std::int64_t n = grid.size();
  for (std::int64_t i = 0; i < n; ++i) {
    VectorXd u = grid.at(i);
    ResolvedPoint rp = ct_point(*field, cfg.eps, ConormalCoords::polar(u[0], u[1], u[2]));
    put(u[0]);
    put(u[1]);
    put(u[2]);
    put(rp.line.u.real());
    put(rp.line.u.imag());
    put(rp.line.v.real());
    put(rp.line.v.imag());
    for (int j = 0; j < 4; ++j) {
      put(rp.w[j].real());
      put(rp.w[j].imag());
    }
    put(std::abs(rp.trace()), true);
  }
  return n;
}

void mesh_export_cmd(const RunConfig& cfg, const std::string& path) {
  cfg.validate();
  auto field = field_for(cfg);
  SampleMesh mesh = build_mesh(ct_mesh_sampler(field, cfg.eps, cfg.ct_grid()), 12);
  export_mesh_csv(mesh, path);
}

}  // namespace conifold
