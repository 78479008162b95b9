#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "conifold/config.hpp"

namespace conifold {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using MapRn = std::function<VectorXd(const VectorXd&)>;

/// Step actually used at x: cfg.step scaled by max(1, |x|_inf).
double fd_step(const VectorXd& x, const FdConfig& cfg);

/// Central-difference Jacobian, error O(h^2); with cfg.richardson the
/// two-step extrapolant (4 J_{h/2} - J_h)/3 is returned instead.
MatrixXd jacobian_fd(const MapRn& f, const VectorXd& x, const FdConfig& cfg = {});

/// Central second derivatives; result[k](i,j) = d2 f_k / dx_i dx_j.
/// Symmetric by construction of the stencil.
std::vector<MatrixXd> hessian_fd(const MapRn& f, const VectorXd& x,
                                 const FdConfig& cfg = {});

/// Directional second derivative d2/ds dt f(x + s X + t Y) at s = t = 0.
VectorXd second_directional_fd(const MapRn& f, const VectorXd& x, const VectorXd& X,
                               const VectorXd& Y, const FdConfig& cfg = {});

/// Fourth-order central first derivative along a single direction.
VectorXd directional_derivative_fd4(const MapRn& f, const VectorXd& x,
                                    const VectorXd& dir, double h);

}  // namespace conifold
