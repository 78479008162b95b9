#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "conifold/coords.hpp"
#include "conifold/types.hpp"

namespace conifold {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// omega = sum_j dx_j ^ dp_j evaluated on two tangent vectors sharing a base.
double omega_eval(const TangentVec& u, const TangentVec& v);

/// lambda = -sum_j p_j dx_j evaluated at the base of v.
double liouville_eval(const TangentVec& v);

/// Fubini-Study metric (1/2) dz (.) conj(dz) / (1+|z|^2)^2 in an affine chart,
/// as a symmetric bilinear value on chart tangents u, v.
double fubini_study_eval(complexd z_affine, complexd u, complexd v);

/// Kahler form of the same metric: Im(conj(u) v) / (1+|z|^2)^2.
double fubini_study_form(complexd z_affine, complexd u, complexd v);

/// Hermitian pairing pieces in w-coordinates. g_w is the Euclidean metric of
/// the w chart and omega_w its Kahler form; both equal twice their (x,p)
/// counterparts because the z -> w change is sqrt(2) times a unitary map.
double metric_w(const CVec4& a, const CVec4& b);
double omega_w(const CVec4& a, const CVec4& b);

// ---------------------------------------------------------------------------
// Generic evaluator handles over a coordinate ambient of dimension dim.
// Base points and tangents are plain real vectors in that chart.
// ---------------------------------------------------------------------------

struct FormHandle {
  std::string name;
  int dim = 0;
  std::function<double(const VectorXd& base, const VectorXd& u, const VectorXd& v)> eval;
};

struct MetricHandle {
  std::string name;
  int dim = 0;
  std::function<double(const VectorXd& base, const VectorXd& u, const VectorXd& v)> eval;

  MatrixXd gram(const VectorXd& base, const MatrixXd& basis) const;
  double norm(const VectorXd& base, const VectorXd& u) const;
};

struct ComplexStructureHandle {
  std::string name;
  int dim = 0;
  std::function<VectorXd(const VectorXd& base, const VectorXd& u)> apply;
};

struct OneFormHandle {
  std::string name;
  int dim = 0;
  std::function<double(const VectorXd& base, const VectorXd& u)> eval;
};

// --- R^8 = (x,p) chart -----------------------------------------------------
FormHandle make_omega_xp();
MetricHandle make_euclidean(int dim, std::string name = "euclid");
ComplexStructureHandle make_J_standard();
OneFormHandle make_liouville();

// --- R^8 = w chart (real/imaginary parts interleaved as re1..re4,im1..im4 is
// NOT used; layout is [Re w1, Im w1, ..., Re w4, Im w4]) --------------------
VectorXd real_of_w(const CVec4& w);
CVec4 w_of_real(const VectorXd& r);
FormHandle make_omega_w_chart();
MetricHandle make_metric_w_chart();
ComplexStructureHandle make_J_w_chart();

// --- R^10 = affine CP^1 chart (2) + w chart (8) -----------------------------
// Layout: [Re z, Im z, Re w1, Im w1, ..., Re w4, Im w4]. The two affine
// charts of CP^1 share these formulas, so handles are chart-agnostic.
FormHandle make_omega_resolved();
MetricHandle make_metric_resolved();
ComplexStructureHandle make_J_resolved();

/// Product sectional curvature of CP^1 x C^4 on the 2-plane spanned by X, Y
/// (Fubini-Study factor has constant curvature 4, flat second factor).
double sectional_product_cp1_c4(const VectorXd& base, const VectorXd& X,
                                const VectorXd& Y);

}  // namespace conifold
