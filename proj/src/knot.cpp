#include "conifold/knot.hpp"

#include <cmath>
#include <fstream>
#include <numeric>

#include <nlohmann/json.hpp>

namespace conifold {

double KnotCurve::sampled_self_distance(int samples) const {
  double best = std::numeric_limits<double>::infinity();
  std::vector<Vec4> pts(static_cast<size_t>(samples));
  const double two_pi = 2.0 * M_PI;
  for (int i = 0; i < samples; ++i)
    pts[static_cast<size_t>(i)] = point(two_pi * i / samples);
  for (int i = 0; i < samples; ++i)
    for (int j = i + 1; j < samples; ++j) {
      double dt = two_pi * (j - i) / samples;
      double sep = std::min(dt, two_pi - dt);
      if (sep <= 0.5) continue;
      best = std::min(best, (pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)]).norm());
    }
  return best;
}

KnotCurve unknot() {
  auto impl = std::make_shared<KnotCurve::Impl>();
  impl->name = "unknot";
  impl->speed = KnotCurve::Speed::unit;
  impl->eval = [](double t) {
    KnotCurve::Jet j;
    double c = std::cos(t), s = std::sin(t);
    j.k << c, s, 0, 0;
    j.dk << -s, c, 0, 0;
    j.ddk << -c, -s, 0, 0;
    return j;
  };
  impl->frame = [](double) {
    NormalFrameJet f;
    f.p1 << 0, 0, 1, 0;
    f.p2 << 0, 0, 0, 1;
    f.dp1.setZero();
    f.dp2.setZero();
    return f;
  };
  return KnotCurve(impl);
}

KnotCurve torus_knot(int m, int n) {
  if (m == n) throw std::invalid_argument("torus knot requires m != n");
  if (std::gcd(m, n) != 1) throw std::invalid_argument("torus knot requires gcd(m,n) = 1");
  auto impl = std::make_shared<KnotCurve::Impl>();
  impl->name = "torus:" + std::to_string(m) + "," + std::to_string(n);
  impl->speed = KnotCurve::Speed::constant;
  const double md = m, nd = n;
  const double r2 = 1.0 / std::sqrt(2.0);
  impl->eval = [md, nd, r2](double t) {
    KnotCurve::Jet j;
    double cm = std::cos(md * t), sm = std::sin(md * t);
    double cn = std::cos(nd * t), sn = std::sin(nd * t);
    j.k << r2 * cm, r2 * sm, r2 * cn, r2 * sn;
    j.dk << -r2 * md * sm, r2 * md * cm, -r2 * nd * sn, r2 * nd * cn;
    j.ddk << -r2 * md * md * cm, -r2 * md * md * sm, -r2 * nd * nd * cn, -r2 * nd * nd * sn;
    return j;
  };
  const double mn = std::sqrt(md * md + nd * nd);
  impl->frame = [md, nd, r2, mn](double t) {
    NormalFrameJet f;
    double cm = std::cos(md * t), sm = std::sin(md * t);
    double cn = std::cos(nd * t), sn = std::sin(nd * t);
    f.p1 << r2 * cm, r2 * sm, -r2 * cn, -r2 * sn;
    f.dp1 << -r2 * md * sm, r2 * md * cm, r2 * nd * sn, -r2 * nd * cn;
    f.p2 << -nd * sm / mn, nd * cm / mn, md * sn / mn, -md * cn / mn;
    f.dp2 << -nd * md * cm / mn, -nd * md * sm / mn, md * nd * cn / mn, md * nd * sn / mn;
    return f;
  };
  return KnotCurve(impl);
}

namespace {

struct SeriesJet {
  Vec4 x, dx, ddx;
};

SeriesJet series_eval(const std::vector<FourierTerm>& terms, double t) {
  SeriesJet s;
  s.x.setZero();
  s.dx.setZero();
  s.ddx.setZero();
  for (const auto& tm : terms) {
    double h = tm.harmonic;
    double c = std::cos(h * t), sn = std::sin(h * t);
    s.x[tm.axis] += tm.cos_coef * c + tm.sin_coef * sn;
    s.dx[tm.axis] += h * (-tm.cos_coef * sn + tm.sin_coef * c);
    s.ddx[tm.axis] += h * h * (-tm.cos_coef * c - tm.sin_coef * sn);
  }
  return s;
}

}  // namespace

KnotCurve fourier_knot(const std::vector<FourierTerm>& terms) {
  for (const auto& tm : terms)
    if (tm.axis < 0 || tm.axis > 3)
      throw std::invalid_argument("fourier term axis must be 0..3");

  // normalization u = x/|x| with analytic derivatives of the normalized curve
  auto jet = [terms](double t) {
    KnotCurve::Jet j;
    SeriesJet s = series_eval(terms, t);
    double r = s.x.norm();
    double rd = s.x.dot(s.dx) / r;
    Vec4 u = s.x / r;
    j.k = u;
    j.dk = s.dx / r - s.x * (s.x.dot(s.dx)) / (r * r * r);
    double a = s.dx.squaredNorm() + s.x.dot(s.ddx);
    j.ddk = s.ddx / r - (2.0 * s.dx * (s.x.dot(s.dx)) + s.x * a) / (r * r * r) +
            3.0 * s.x * (s.x.dot(s.dx)) * (s.x.dot(s.dx)) / (r * r * r * r * r);
    (void)rd;
    return j;
  };

  // reject degenerate input before handing out the curve
  const int probe = 1024;
  double min_r = std::numeric_limits<double>::infinity();
  double min_speed = std::numeric_limits<double>::infinity();
  for (int i = 0; i < probe; ++i) {
    double t = 2.0 * M_PI * i / probe;
    SeriesJet s = series_eval(terms, t);
    min_r = std::min(min_r, s.x.norm());
    KnotCurve::Jet j = jet(t);
    min_speed = std::min(min_speed, j.dk.norm());
  }
  if (!(min_r >= 0.1))
    throw std::invalid_argument("fourier series passes too close to the origin");
  if (!(min_speed > 1e-6))
    throw std::invalid_argument("fourier series is not an immersed curve");

  auto impl = std::make_shared<KnotCurve::Impl>();
  impl->name = "fourier";
  impl->speed = KnotCurve::Speed::general;
  impl->eval = jet;
  return KnotCurve(impl);
}

KnotCurve parse_knot_spec(const std::string& spec) {
  if (spec == "unknot") return unknot();
  if (spec.rfind("torus:", 0) == 0) {
    std::string rest = spec.substr(6);
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("torus spec is torus:m,n");
    int m = std::stoi(rest.substr(0, comma));
    int n = std::stoi(rest.substr(comma + 1));
    return torus_knot(m, n);
  }
  if (spec.rfind("fourier:", 0) == 0) return fourier_knot(load_fourier_terms(spec.substr(8)));
  throw std::invalid_argument("unknown knot spec '" + spec + "'");
}

std::vector<FourierTerm> load_fourier_terms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open coefficient file '" + path + "'");
  nlohmann::json j;
  in >> j;
  if (!j.is_array()) throw std::invalid_argument("coefficient file must hold an array");
  std::vector<FourierTerm> terms;
  for (const auto& e : j) {
    FourierTerm tm;
    tm.axis = e.at("axis").get<int>();
    tm.harmonic = e.at("harmonic").get<int>();
    tm.cos_coef = e.value("cos", 0.0);
    tm.sin_coef = e.value("sin", 0.0);
    terms.push_back(tm);
  }
  return terms;
}

std::vector<FourierTerm> trefoil_fourier_terms() {
  // x(t) = (cos t + 2 cos 2t, sin t - 2 sin 2t, sin 3t, 0.5)
  return {
      {0, 1, 1.0, 0.0}, {0, 2, 2.0, 0.0}, {1, 1, 0.0, 1.0},
      {1, 2, 0.0, -2.0}, {2, 3, 0.0, 1.0}, {3, 0, 0.5, 0.0},
  };
}

}  // namespace conifold
