#include "conifold/forms.hpp"

namespace conifold {

static void require_same_base(const TangentVec& u, const TangentVec& v) {
  if ((u.base.x - v.base.x).norm() > 1e-12 || (u.base.p - v.base.p).norm() > 1e-12)
    throw std::invalid_argument("tangent vectors must share a base point");
}

double omega_eval(const TangentVec& u, const TangentVec& v) {
  require_same_base(u, v);
  return u.dx().dot(v.dp()) - v.dx().dot(u.dp());
}

double liouville_eval(const TangentVec& v) { return -v.base.p.dot(v.dx()); }

double fubini_study_eval(complexd z, complexd u, complexd v) {
  double denom = 1.0 + std::norm(z);
  return (u * std::conj(v)).real() / (denom * denom);
}

double fubini_study_form(complexd z, complexd u, complexd v) {
  double denom = 1.0 + std::norm(z);
  return (std::conj(u) * v).imag() / (denom * denom);
}

double metric_w(const CVec4& a, const CVec4& b) {
  double s = 0;
  for (int j = 0; j < 4; ++j) s += (a[j] * std::conj(b[j])).real();
  return s;
}

double omega_w(const CVec4& a, const CVec4& b) {
  double s = 0;
  for (int j = 0; j < 4; ++j) s += (std::conj(a[j]) * b[j]).imag();
  return s;
}

MatrixXd MetricHandle::gram(const VectorXd& base, const MatrixXd& basis) const {
  int k = static_cast<int>(basis.cols());
  MatrixXd g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      g(i, j) = eval(base, basis.col(i), basis.col(j));
      g(j, i) = g(i, j);
    }
  return g;
}

double MetricHandle::norm(const VectorXd& base, const VectorXd& u) const {
  return std::sqrt(std::max(0.0, eval(base, u, u)));
}

FormHandle make_omega_xp() {
  FormHandle f;
  f.name = "omega";
  f.dim = 8;
  f.eval = [](const VectorXd&, const VectorXd& u, const VectorXd& v) {
    return u.head<4>().dot(v.tail<4>()) - v.head<4>().dot(u.tail<4>());
  };
  return f;
}

MetricHandle make_euclidean(int dim, std::string name) {
  MetricHandle g;
  g.name = std::move(name);
  g.dim = dim;
  g.eval = [](const VectorXd&, const VectorXd& u, const VectorXd& v) { return u.dot(v); };
  return g;
}

ComplexStructureHandle make_J_standard() {
  ComplexStructureHandle J;
  J.name = "J_standard";
  J.dim = 8;
  J.apply = [](const VectorXd&, const VectorXd& u) {
    VectorXd out(8);
    out.head<4>() = -u.tail<4>();
    out.tail<4>() = u.head<4>();
    return out;
  };
  return J;
}

OneFormHandle make_liouville() {
  OneFormHandle l;
  l.name = "liouville";
  l.dim = 8;
  l.eval = [](const VectorXd& base, const VectorXd& u) {
    return -base.tail<4>().dot(u.head<4>());
  };
  return l;
}

VectorXd real_of_w(const CVec4& w) {
  VectorXd r(8);
  for (int j = 0; j < 4; ++j) {
    r[2 * j] = w[j].real();
    r[2 * j + 1] = w[j].imag();
  }
  return r;
}

CVec4 w_of_real(const VectorXd& r) {
  CVec4 w;
  for (int j = 0; j < 4; ++j) w[j] = complexd(r[2 * j], r[2 * j + 1]);
  return w;
}

FormHandle make_omega_w_chart() {
  FormHandle f;
  f.name = "omega_w";
  f.dim = 8;
  f.eval = [](const VectorXd&, const VectorXd& u, const VectorXd& v) {
    return omega_w(w_of_real(u), w_of_real(v));
  };
  return f;
}

MetricHandle make_metric_w_chart() {
  MetricHandle g;
  g.name = "g_w";
  g.dim = 8;
  g.eval = [](const VectorXd&, const VectorXd& u, const VectorXd& v) { return u.dot(v); };
  return g;
}

ComplexStructureHandle make_J_w_chart() {
  ComplexStructureHandle J;
  J.name = "J_w";
  J.dim = 8;
  J.apply = [](const VectorXd&, const VectorXd& u) {
    VectorXd out(8);
    for (int j = 0; j < 4; ++j) {
      out[2 * j] = -u[2 * j + 1];
      out[2 * j + 1] = u[2 * j];
    }
    return out;
  };
  return J;
}

namespace {
complexd slot(const VectorXd& a, int k) { return complexd(a[2 * k], a[2 * k + 1]); }
}  // namespace

FormHandle make_omega_resolved() {
  FormHandle f;
  f.name = "omega_hat";
  f.dim = 10;
  f.eval = [](const VectorXd& base, const VectorXd& u, const VectorXd& v) {
    complexd z = slot(base, 0);
    double s = fubini_study_form(z, slot(u, 0), slot(v, 0));
    for (int j = 1; j < 5; ++j) s += (std::conj(slot(u, j)) * slot(v, j)).imag();
    return s;
  };
  return f;
}

MetricHandle make_metric_resolved() {
  MetricHandle g;
  g.name = "g_hat";
  g.dim = 10;
  g.eval = [](const VectorXd& base, const VectorXd& u, const VectorXd& v) {
    complexd z = slot(base, 0);
    double s = fubini_study_eval(z, slot(u, 0), slot(v, 0));
    s += u.tail(8).dot(v.tail(8));
    return s;
  };
  return g;
}

ComplexStructureHandle make_J_resolved() {
  ComplexStructureHandle J;
  J.name = "J_hat";
  J.dim = 10;
  J.apply = [](const VectorXd&, const VectorXd& u) {
    VectorXd out(10);
    for (int j = 0; j < 5; ++j) {
      out[2 * j] = -u[2 * j + 1];
      out[2 * j + 1] = u[2 * j];
    }
    return out;
  };
  return J;
}

double sectional_product_cp1_c4(const VectorXd& base, const VectorXd& X,
                                const VectorXd& Y) {
  MetricHandle g = make_metric_resolved();
  double gxx = g.eval(base, X, X);
  double gyy = g.eval(base, Y, Y);
  double gxy = g.eval(base, X, Y);
  double gram = gxx * gyy - gxy * gxy;
  if (gram <= 1e-12) throw std::invalid_argument("degenerate 2-plane");
  complexd z = slot(base, 0);
  double fxx = fubini_study_eval(z, slot(X, 0), slot(X, 0));
  double fyy = fubini_study_eval(z, slot(Y, 0), slot(Y, 0));
  double fxy = fubini_study_eval(z, slot(X, 0), slot(Y, 0));
  // curvature tensor of the constant-curvature-4 factor, zero flat factor
  return 4.0 * (fxx * fyy - fxy * fxy) / gram;
}

}  // namespace conifold
