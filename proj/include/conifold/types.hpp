#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace conifold {

using Vec4 = Eigen::Vector4d;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat4 = Eigen::Matrix4d;
using CVec2 = Eigen::Vector2cd;
using CVec4 = Eigen::Vector4cd;
using complexd = std::complex<double>;

/// A point of R^4 x R^4, the ambient home of T*S^3 and of the cones C, C_a.
struct PhasePoint {
  Vec4 x = Vec4::Zero();
  Vec4 p = Vec4::Zero();

  Vec8 flat() const {
    Vec8 f;
    f << x, p;
    return f;
  }
  static PhasePoint from_flat(const Vec8& f) {
    PhasePoint q;
    q.x = f.head<4>();
    q.p = f.tail<4>();
    return q;
  }

  /// |x| = 1 and x.p = 0 within tol.
  bool on_cotangent_sphere(double tol = 1e-10) const {
    return std::abs(x.norm() - 1.0) <= tol && std::abs(x.dot(p)) <= tol;
  }
  /// |x| = |p| and x.p = 0 within tol (the singular quadric).
  bool on_cone(double tol = 1e-10) const {
    return std::abs(x.norm() - p.norm()) <= tol && std::abs(x.dot(p)) <= tol;
  }
  /// |x|^2 - |p|^2 = a^2 and x.p = 0 within tol (the smooth quadric).
  bool on_deformed_cone(double a, double tol = 1e-9) const {
    return std::abs(x.squaredNorm() - p.squaredNorm() - a * a) <= tol &&
           std::abs(x.dot(p)) <= tol;
  }
};

/// Complex coordinate systems on R^4 x R^4 ~ C^4. Z packs z_j = x_j + i p_j;
/// W is the unitary-up-to-scale change in which the cone becomes
/// w1 w4 - w2 w3 = 0.
enum class CoordSystem { Z, W };

/// A C^4 vector tagged with its coordinate system so conversions cannot be
/// applied to the wrong side.
struct ComplexVec4 {
  CVec4 v = CVec4::Zero();
  CoordSystem system = CoordSystem::Z;
};

/// A tangent vector of R^4 x R^4 attached to a base point. The base is
/// bookkeeping only; tangency to any particular submanifold is checked by
/// operations, not by the type.
struct TangentVec {
  PhasePoint base;
  Vec8 d = Vec8::Zero();

  Vec4 dx() const { return d.head<4>(); }
  Vec4 dp() const { return d.tail<4>(); }

  static TangentVec at(const PhasePoint& q, const Vec4& dx, const Vec4& dp) {
    TangentVec t;
    t.base = q;
    t.d << dx, dp;
    return t;
  }
};

/// A point of CP^1 stored by its canonical representative: |u|^2+|v|^2 = 1
/// with the first entry of modulus above a small floor made real-positive.
/// Equality of canonical representatives is plain component comparison.
struct ProjPoint {
  complexd u{0.0, 0.0};
  complexd v{0.0, 0.0};

  static ProjPoint of(complexd u_raw, complexd v_raw) {
    double n = std::sqrt(std::norm(u_raw) + std::norm(v_raw));
    if (!(n > 0.0)) throw std::invalid_argument("projective point needs (u,v) != 0");
    complexd u1 = u_raw / n, v1 = v_raw / n;
    complexd lead = (std::abs(u1) > 1e-12) ? u1 : v1;
    complexd phase = std::abs(lead) > 0 ? lead / std::abs(lead) : complexd(1, 0);
    ProjPoint p;
    p.u = u1 / phase;
    p.v = v1 / phase;
    return p;
  }

  /// Affine coordinate u/v; caller is responsible for the chart choice.
  complexd affine() const {
    if (std::abs(v) < 1e-300) throw std::domain_error("affine chart undefined at [1:0]");
    return u / v;
  }

  bool close_to(const ProjPoint& o, double tol = 1e-12) const {
    return std::abs(u - o.u) <= tol && std::abs(v - o.v) <= tol;
  }
};

inline double wrap_angle(double t) {
  constexpr double two_pi = 6.283185307179586476925286766559;
  double w = std::fmod(t, two_pi);
  if (w < 0) w += two_pi;
  return w;
}

}  // namespace conifold
