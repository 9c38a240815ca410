#include "asdglue/instanton.hpp"

#include <cmath>

#include "asdglue/error.hpp"

namespace asdglue {

TwoPointConfig::TwoPointConfig(double L) : L_(L) {
  if (!std::isfinite(L) || !(L > 0.0)) throw PreconditionError("TwoPointConfig: L must be positive");
}

double magnitude(const StdInstanton& inst, const Point4& x) {
  const Point4 d = x - inst.center;
  const double l2 = inst.scale * inst.scale;
  const double r2 = d.x0 * d.x0 + d.x1 * d.x1 + d.x2 * d.x2 + d.x3 * d.x3;
  const double den = l2 + r2;
  return l2 / (den * den);
}

CurvatureMatrix f_std(const StdInstanton& inst, const Point4& x) {
  const Point4 d = x - inst.center;
  if (!(d.norm() >= 1e-12 * inst.scale)) throw GaugeSingularity("f_std: evaluation at the bubble center");
  const Rotation dir = rho(UnitQuaternion::normalize(d.as_quaternion()));
  return magnitude(inst, x) * (inst.gluing_angle.inverse() * dir).matrix();
}

CurvatureMatrix f_std_regular_gauge(const StdInstanton& inst, const Point4& x) {
  return magnitude(inst, x) * Mat3::identity();
}

UnitQuaternion g_map(const TwoPointConfig& cfg, const Point4& y) {
  const Point4 a = y - cfg.p();
  const Point4 b = y - cfg.q();
  const double tol = 1e-12 * cfg.L();
  if (!(a.norm() >= tol) || !(b.norm() >= tol)) throw PreconditionError("g_map: y coincides with p or q");
  return UnitQuaternion::normalize(a.as_quaternion().conj() * b.as_quaternion());
}

Quaternion g_near_expansion(const TwoPointConfig& cfg, const Vec3& y_im) {
  const double k = -2.0 / cfg.L();
  return {-1.0, k * y_im[0], k * y_im[1], k * y_im[2]};
}

Quaternion g_far_expansion(const TwoPointConfig& cfg, const Vec3& y_im) {
  const double k = -2.0 * cfg.L() / dot(y_im, y_im);
  return {1.0, k * y_im[0], k * y_im[1], k * y_im[2]};
}

}  // namespace asdglue
