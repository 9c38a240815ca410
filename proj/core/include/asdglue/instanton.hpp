#pragma once

#include "asdglue/linalg3.hpp"
#include "asdglue/rotations.hpp"

namespace asdglue {

/// F^- at a point: rows are Lie-algebra directions i, j, k; columns the
/// components along the ASD basis 2-forms.
using CurvatureMatrix = Mat3;

/// Charge-one instanton in the exterior radial gauge about its center.
struct StdInstanton {
  Point4 center;
  double scale = 1.0;
  Rotation gluing_angle;
};

/// The two marked points p = (L, 0, 0, 0) and q = (-L, 0, 0, 0).
class TwoPointConfig {
 public:
  /// Throws PreconditionError unless L is finite and positive.
  explicit TwoPointConfig(double L);

  double L() const { return L_; }
  Point4 p() const { return {L_, 0.0, 0.0, 0.0}; }
  Point4 q() const { return {-L_, 0.0, 0.0, 0.0}; }

 private:
  double L_;
};

/// lambda^2 / (lambda^2 + |x - y|^2)^2. Finite at x = y.
double magnitude(const StdInstanton& inst, const Point4& x);

/// magnitude * m^{-1} rho((x - y)/|x - y|).
/// Throws GaugeSingularity when |x - y| < 1e-12 * lambda.
CurvatureMatrix f_std(const StdInstanton& inst, const Point4& x);

/// Same bubble (identity gluing angle) in the regular gauge about its
/// center, where the curvature is magnitude * I. The exterior form is
/// rho((x - y)/|x - y|) times this.
CurvatureMatrix f_std_regular_gauge(const StdInstanton& inst, const Point4& x);

/// conj(y - p)(y - q) / |(y - p)(y - q)|.
/// Throws PreconditionError within 1e-12 * L of p or q.
UnitQuaternion g_map(const TwoPointConfig& cfg, const Point4& y);

/// Leading behaviour of g on the plane y0 = 0: -1 - 2 y_I / L for
/// |y_I| << L, and 1 - 2 L y_I / |y_I|^2 for |y_I| >> L.
Quaternion g_near_expansion(const TwoPointConfig& cfg, const Vec3& y_im);
Quaternion g_far_expansion(const TwoPointConfig& cfg, const Vec3& y_im);

}  // namespace asdglue
