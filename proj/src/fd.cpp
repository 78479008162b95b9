#include "conifold/fd.hpp"

namespace conifold {

double fd_step(const VectorXd& x, const FdConfig& cfg) {
  double scale = std::max(1.0, x.lpNorm<Eigen::Infinity>());
  return cfg.step * scale;
}

static MatrixXd jacobian_plain(const MapRn& f, const VectorXd& x, double h) {
  const int n = static_cast<int>(x.size());
  MatrixXd J;
  for (int i = 0; i < n; ++i) {
    VectorXd xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    VectorXd diff = (f(xp) - f(xm)) / (2 * h);
    if (J.size() == 0) J.resize(diff.size(), n);
    J.col(i) = diff;
  }
  return J;
}

MatrixXd jacobian_fd(const MapRn& f, const VectorXd& x, const FdConfig& cfg) {
  double h = fd_step(x, cfg);
  MatrixXd J = jacobian_plain(f, x, h);
  if (!cfg.richardson) return J;
  MatrixXd J2 = jacobian_plain(f, x, h / 2);
  return (4.0 * J2 - J) / 3.0;
}

std::vector<MatrixXd> hessian_fd(const MapRn& f, const VectorXd& x, const FdConfig& cfg) {
  const int n = static_cast<int>(x.size());
  // larger step: second differences lose half the significant digits
  double h = 100.0 * fd_step(x, cfg);
  VectorXd f0 = f(x);
  const int m = static_cast<int>(f0.size());
  std::vector<MatrixXd> H(m, MatrixXd::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    VectorXd xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    VectorXd dii = (f(xp) - 2 * f0 + f(xm)) / (h * h);
    for (int k = 0; k < m; ++k) H[k](i, i) = dii[k];
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      VectorXd xpp = x, xpm = x, xmp = x, xmm = x;
      xpp[i] += h;
      xpp[j] += h;
      xpm[i] += h;
      xpm[j] -= h;
      xmp[i] -= h;
      xmp[j] += h;
      xmm[i] -= h;
      xmm[j] -= h;
      VectorXd dij = (f(xpp) - f(xpm) - f(xmp) + f(xmm)) / (4 * h * h);
      for (int k = 0; k < m; ++k) {
        H[k](i, j) = dij[k];
        H[k](j, i) = dij[k];
      }
    }
  return H;
}

VectorXd second_directional_fd(const MapRn& f, const VectorXd& x, const VectorXd& X,
                               const VectorXd& Y, const FdConfig& cfg) {
  double h = 100.0 * fd_step(x, cfg);
  VectorXd fpp = f(x + h * X + h * Y);
  VectorXd fpm = f(x + h * X - h * Y);
  VectorXd fmp = f(x - h * X + h * Y);
  VectorXd fmm = f(x - h * X - h * Y);
  return (fpp - fpm - fmp + fmm) / (4 * h * h);
}

VectorXd directional_derivative_fd4(const MapRn& f, const VectorXd& x,
                                    const VectorXd& dir, double h) {
  VectorXd f1 = f(x + h * dir);
  VectorXd f2 = f(x + 2 * h * dir);
  VectorXd fm1 = f(x - h * dir);
  VectorXd fm2 = f(x - 2 * h * dir);
  return (8.0 * (f1 - fm1) - (f2 - fm2)) / (12.0 * h);
}

}  // namespace conifold
