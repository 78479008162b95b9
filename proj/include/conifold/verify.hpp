#pragma once

#include <memory>

#include "conifold/conormal.hpp"
#include "conifold/forms.hpp"
#include "conifold/sampler.hpp"

namespace conifold {

// --- maps between coordinate charts -----------------------------------------

struct MapHandle {
  std::string name;
  int src_dim = 0, tgt_dim = 0;
  MapRn apply;
  std::function<MapRn(const VectorXd& center)> local_factory;  // chart pinning

  MapRn local(const VectorXd& center) const {
    return local_factory ? local_factory(center) : apply;
  }
};

/// Resolution lift as a chart map: w-chart R^8 -> resolved chart R^10, with
/// the pair and CP^1 affine chart pinned per stencil center.
MapHandle make_lift_map();

/// Cone chart embedding (z, xi, eta) in R^6 -> w-chart R^8.
MapHandle make_cone_chart_map(int chart = 1);

/// Composition w -> affine CP^1 trace of the lift, R^8 -> R^2.
MapHandle make_lift_trace_map();

/// Ball chart centered at (z0, xi0, eta0): (lambda, alpha, beta) in C^3 ->
/// (z0 + lambda / sqrt(1
///  + |xi0|^2 + |eta0|^2), xi0 + alpha, eta0 + beta).
MapHandle make_ball_chart_map(const VectorXd& center6);

// --- metrics on chart coordinates -------------------------------------------

/// Cone metric (1/2)((|xi|^2+|eta|^2) dz(.)conj(dz) + dxi(.)conj(dxi)
/// + deta(.)conj(deta)) on the (z, xi, eta) chart.
MetricHandle make_cone_metric();

/// Same with coefficient (1 + |xi|^2 + |eta|^2) on the dz block.
MetricHandle make_ball_metric();

/// Fubini-Study metric on the 2-real-dimensional affine chart.
MetricHandle make_fs_metric();

// --- forms tied to the perturbation -----------------------------------------

/// Pushforward of omega through the fiber-shift isotopy, evaluated on the
/// (x,p) chart: vectors are pulled back through the inverse shift using the
/// field Jacobian.
FormHandle make_omega_pushforward(std::shared_ptr<const PerturbationField> field,
                                  double eps);

/// The transited form on the resolved chart: drop the CP^1 component, pull
/// the w-part back to (x,p), pull through the inverse shift, evaluate omega.
FormHandle make_omega_tilde(std::shared_ptr<const PerturbationField> field, double eps);

/// Tangent space of the resolved 3-fold at a resolved chart point; columns
/// span the 6-dimensional tangent inside R^10.
MatrixXd resolved_tangent_basis(const VectorXd& pt10, int cp1_chart);

// --- engines -----------------------------------------------------------------

struct RestrictionResult {
  double max_abs = 0.0;
  VectorXd arg_param;
  std::int64_t count = 0;
  std::int64_t excluded = 0;
};

/// Max over the sampler grid of |form(T_i, T_j)| with metric-unit tangent
/// basis vectors. Bases with Gram condition number above 1e8 are excluded
/// and counted.
RestrictionResult form_restriction_max(const FormHandle& form,
                                       const SubmanifoldSampler& sampler,
                                       const MetricHandle& normalizer,
                                       const FdConfig& fd = {});

using TangentSpaceFn = std::function<MatrixXd(const VectorXd& base)>;

struct TamenessResult {
  double inf_ratio = 0.0, sup_ratio = 0.0;
  std::int64_t samples = 0;
  VectorXd witness_base;
};

/// inf and sup of form(X, JX) / g(X, X) over random directions at the given
/// base points. X ranges over the span provided by tangent_space (identity
/// when null).
TamenessResult tameness_bounds(const FormHandle& form, const ComplexStructureHandle& J,
                               const MetricHandle& g, const MatrixXd& base_points,
                               const TangentSpaceFn& tangent_space, int vector_samples,
                               std::uint64_t seed);

struct BilipschitzResult {
  double min_eig = 0.0, max_eig = 0.0;
  std::int64_t count = 0;
  std::int64_t excluded = 0;
};

/// Extreme generalized eigenvalues of the pullback target metric against the
/// source metric over the sampler grid (tangent bases of the source).
BilipschitzResult bilipschitz_bounds(const MapHandle& map, const MetricHandle& src_metric,
                                     const MetricHandle& tgt_metric,
                                     const SubmanifoldSampler& sampler,
                                     const FdConfig& fd = {});

/// Normal component of the parametrization's second derivative along ambient
/// tangents X, Y (flat ambient). Throws if X or Y is not tangent at u.
VectorXd second_fundamental_form(const SubmanifoldSampler& sub, const VectorXd& u,
                                 const VectorXd& X, const VectorXd& Y,
                                 const FdConfig& fd = {});

struct ChristoffelHandle {
  std::string name;
  int dim = 0;
  std::function<VectorXd(const VectorXd& base, const VectorXd& X, const VectorXd& Y)> eval;
};

ChristoffelHandle christoffel_zero(int dim);
/// Coordinate Christoffel symbols of a metric handle by central differences.
ChristoffelHandle christoffel_of_metric(const MetricHandle& g, const FdConfig& fd = {});
/// Closed form for the Fubini-Study block of the resolved chart (slots 0,1),
/// flat elsewhere.
ChristoffelHandle christoffel_fs_block(int dim);

/// Second fundamental form in a coordinate ambient with metric g and
/// connection gamma.
VectorXd second_fundamental_form_g(const SubmanifoldSampler& sub, const VectorXd& u,
                                   const VectorXd& X, const VectorXd& Y,
                                   const MetricHandle& g, const ChristoffelHandle& gamma,
                                   const FdConfig& fd = {});

/// Covariant Hessian of a map between coordinate manifolds:
/// d2Phi(X,Y) + gamma_tgt(dPhi X, dPhi Y) - dPhi(gamma_src(X, Y)).
VectorXd covariant_hessian(const MapHandle& map, const ChristoffelHandle& gamma_src,
                           const ChristoffelHandle& gamma_tgt, const VectorXd& point,
                           const VectorXd& X, const VectorXd& Y, const FdConfig& fd = {});

/// Sectional curvature of the sampled submanifold by the Gauss equation in a
/// flat ambient (ambient term supplied by the caller when nonzero).
double gauss_sectional(const SubmanifoldSampler& sub, const VectorXd& u, const VectorXd& X,
                       const VectorXd& Y, const FdConfig& fd = {},
                       const std::function<double(const VectorXd&, const VectorXd&,
                                                  const VectorXd&)>& ambient_sec = {});

/// Sectional curvature from the induced metric's Riemann tensor (nested
/// finite differences); the independent cross-check of the Gauss route.
double induced_riemann_sectional(const SubmanifoldSampler& sub, const VectorXd& u,
                                 const VectorXd& Xp, const VectorXd& Yp,
                                 const FdConfig& fd = {});

/// Smallest principal angle between the tangent space and its J-image,
/// measured in the given metric; positive iff the sample is totally real.
double totally_real_angle(const SubmanifoldSampler& sub, const VectorXd& u,
                          const ComplexStructureHandle& J, const MetricHandle& g,
                          const FdConfig& fd = {});

struct StokesResult {
  double interior = 0.0;
  double boundary = 0.0;
};

/// Interior integral of the form over a disc [0,1]^2 -> ambient against the
/// boundary integral of the primitive one-form (composite Simpson rules).
StokesResult stokes_check(const MapRn& disc, const FormHandle& form,
                          const OneFormHandle& primitive, int quad = 128);

/// Max of |II(X, Y)| over unit tangent pairs at u (random + basis pairs).
double ii_norm_estimate(const SubmanifoldSampler& sub, const VectorXd& u, int samples,
                        std::uint64_t seed, const FdConfig& fd = {});

}  // namespace conifold
