#pragma once

#include <random>
#include <utility>

#include "asdglue/linalg3.hpp"

namespace asdglue {

/// Quaternion w + x i + y j + z k with i j = k.
struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  static constexpr Quaternion real(double a) { return {a, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion pure(const Vec3& v) { return {0.0, v[0], v[1], v[2]}; }

  Vec3 imaginary() const { return {x, y, z}; }
  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm() const;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion quat_mul(const Quaternion& a, const Quaternion& b);
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return quat_mul(a, b); }
Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a);
Quaternion operator*(double s, const Quaternion& a);
double dot(const Quaternion& a, const Quaternion& b);

/// Quaternion of norm one. Construction always renormalizes.
class UnitQuaternion {
 public:
  UnitQuaternion() : q_{1.0, 0.0, 0.0, 0.0} {}

  /// Throws PreconditionError for (near) zero or non-finite input.
  static UnitQuaternion normalize(const Quaternion& q);

  const Quaternion& value() const { return q_; }
  double w() const { return q_.w; }
  Vec3 imaginary() const { return q_.imaginary(); }

  UnitQuaternion inverse() const { return UnitQuaternion(q_.conj()); }
  UnitQuaternion operator-() const { return UnitQuaternion(-q_); }
  friend UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
    return normalize(a.q_ * b.q_);
  }

 private:
  explicit UnitQuaternion(const Quaternion& q) : q_(q) {}
  Quaternion q_;
};

/// Element of SO(3). The constructor path validates orthonormality and
/// det = +1.
class Rotation {
 public:
  Rotation() : m_(Mat3::identity()) {}

  static Rotation identity() { return Rotation(); }

  /// Throws PreconditionError if m is not a proper rotation within `tol`.
  static Rotation from_matrix(const Mat3& m, double tol = 1e-6);

  const Mat3& matrix() const { return m_; }
  Rotation inverse() const { return Rotation(m_.transposed(), Unchecked{}); }

  friend Rotation operator*(const Rotation& a, const Rotation& b) { return Rotation(a.m_ * b.m_, Unchecked{}); }
  friend Vec3 operator*(const Rotation& a, const Vec3& v) { return a.m_ * v; }

  /// Largest deviation of m^T m from the identity, and |det m - 1|.
  static double orthonormality_defect(const Mat3& m);

 private:
  struct Unchecked {};
  Rotation(const Mat3& m, Unchecked) : m_(m) {}
  friend Rotation rho(const UnitQuaternion& g);
  Mat3 m_;
};

/// Point of R^4 in normal coordinates, identified with x0 + x1 i + x2 j + x3 k.
struct Point4 {
  double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

  static Point4 from_parts(double real, const Vec3& im) { return {real, im[0], im[1], im[2]}; }

  Quaternion as_quaternion() const { return {x0, x1, x2, x3}; }
  Vec3 imaginary() const { return {x1, x2, x3}; }
  double norm() const;

  friend bool operator==(const Point4&, const Point4&) = default;
};

Point4 operator+(const Point4& a, const Point4& b);
Point4 operator-(const Point4& a, const Point4& b);
Point4 operator*(double s, const Point4& a);

/// Double cover SU(2) -> SO(3): column c of rho(g) is g e_c g^{-1} for
/// e = (i, j, k), written in i, j, k coordinates.
Rotation rho(const UnitQuaternion& g);

/// Both lifts of r. The first has nonnegative real part (ties broken by the
/// i, then j, then k component); the second is its negative.
std::pair<UnitQuaternion, UnitQuaternion> rho_inverse_pair(const Rotation& r);

/// Geodesic angle in [0, pi] between a and b.
double rotation_distance(const Rotation& a, const Rotation& b);

/// Rotation by |omega| about omega / |omega|.
Rotation exp_so3(const Vec3& omega);
/// Inverse of exp_so3 with angle in [0, pi].
Vec3 log_so3(const Rotation& r);
/// Unit quaternion lift of exp_so3(omega) with nonnegative real part.
UnitQuaternion quat_exp(const Vec3& omega);

using Rng = std::mt19937_64;

/// Haar-uniform unit quaternion from a normalized 4-d Gaussian.
UnitQuaternion sample_unit_quaternion(Rng& rng);
Rotation sample_rotation(Rng& rng);

}  // namespace asdglue
