#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conifold/types.hpp"

namespace conifold {

/// Normal-plane frame data along a knot: p1, p2 span the orthogonal
/// complement of span{k, dk} together with their t-derivatives.
struct NormalFrameJet {
  Vec4 p1, p2, dp1, dp2;
};

/// A smooth closed parametrized curve on S^3 with derivative access,
/// t in [0, 2pi). Immutable after construction; evaluation is pure.
class KnotCurve {
 public:
  enum class Speed { unit, constant, general };

  struct Jet {
    Vec4 k, dk, ddk;
  };

  Jet eval(double t) const { return impl_->eval(wrap_angle(t)); }
  Vec4 point(double t) const { return eval(t).k; }
  Vec4 velocity(double t) const { return eval(t).dk; }

  Speed speed() const { return impl_->speed; }
  const std::string& name() const { return impl_->name; }

  bool has_analytic_frame() const { return bool(impl_->frame); }
  NormalFrameJet analytic_frame(double t) const { return impl_->frame(wrap_angle(t)); }

  /// Minimum chordal distance between samples separated by more than 0.5 in
  /// parameter; half of it is the default perturbation-field tube radius.
  double sampled_self_distance(int samples = 2048) const;

  struct Impl {
    std::function<Jet(double)> eval;
    std::function<NormalFrameJet(double)> frame;  // optional closed form
    Speed speed = Speed::general;
    std::string name;
  };

  explicit KnotCurve(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

 private:
  std::shared_ptr<const Impl> impl_;
};

/// The great circle k(t) = (cos t, sin t, 0, 0); unit speed.
KnotCurve unknot();

/// k(t) = (1/sqrt2)(e^{imt}, e^{int}) on the Clifford torus; requires
/// gcd(m,n) = 1 and m != n. Constant speed |dk|^2 = (m^2+n^2)/2.
KnotCurve torus_knot(int m, int n);

struct FourierTerm {
  int axis = 0;      // 0..3
  int harmonic = 0;  // multiplies t
  double cos_coef = 0.0;
  double sin_coef = 0.0;
};

/// Truncated Fourier series in R^4 radially projected onto S^3. Rejects
/// series passing near the origin (min |x| < 0.1) and non-immersed curves.
KnotCurve fourier_knot(const std::vector<FourierTerm>& terms);

/// Parses `unknot`, `torus:m,n`, or `fourier:<path-to-JSON-coefficients>`.
/// The JSON file holds an array of {axis, harmonic, cos, sin}.
KnotCurve parse_knot_spec(const std::string& spec);

std::vector<FourierTerm> load_fourier_terms(const std::string& path);

/// Built-in trefoil-flavoured series used by tests and fixtures.
std::vector<FourierTerm> trefoil_fourier_terms();

}  // namespace conifold
