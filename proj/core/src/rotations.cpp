#include "asdglue/rotations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "asdglue/error.hpp"

namespace asdglue {

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
Quaternion operator-(const Quaternion& a, const Quaternion& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
Quaternion operator*(double s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
double dot(const Quaternion& a, const Quaternion& b) { return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z; }

UnitQuaternion UnitQuaternion::normalize(const Quaternion& q) {
  const double n = q.norm();
  if (!std::isfinite(n) || n < 1e-300) throw PreconditionError("cannot normalize a zero or non-finite quaternion");
  return UnitQuaternion((1.0 / n) * q);
}

double Rotation::orthonormality_defect(const Mat3& m) {
  const Mat3 g = m.transposed() * m;
  return std::max(max_abs_diff(g, Mat3::identity()), std::abs(m.det() - 1.0));
}

Rotation Rotation::from_matrix(const Mat3& m, double tol) {
  if (!m.finite() || orthonormality_defect(m) > tol) throw PreconditionError("matrix is not a proper rotation");
  return Rotation(m, Unchecked{});
}

double Point4::norm() const { return std::sqrt(x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3); }
Point4 operator+(const Point4& a, const Point4& b) { return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
Point4 operator-(const Point4& a, const Point4& b) { return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
Point4 operator*(double s, const Point4& a) { return {s * a.x0, s * a.x1, s * a.x2, s * a.x3}; }

Rotation rho(const UnitQuaternion& g) {
  const auto& [w, x, y, z] = g.value();
  Mat3 m{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),  //
          2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),  //
          2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
  return Rotation(m, Rotation::Unchecked{});
}

namespace {

// Shepperd's method: pick the numerically largest of 4w^2, 4x^2, 4y^2, 4z^2.
Quaternion quaternion_of(const Mat3& r) {
  const double tr = r.trace();
  const std::array<double, 4> diag{tr, r(0, 0), r(1, 1), r(2, 2)};
  const auto k = static_cast<std::size_t>(std::max_element(diag.begin(), diag.end()) - diag.begin());
  Quaternion q;
  switch (k) {
    case 0: {
      const double s = 2.0 * std::sqrt(std::max(0.0, 1.0 + tr));
      q = {0.25 * s, (r(2, 1) - r(1, 2)) / s, (r(0, 2) - r(2, 0)) / s, (r(1, 0) - r(0, 1)) / s};
      break;
    }
    case 1: {
      const double s = 2.0 * std::sqrt(std::max(0.0, 1.0 + r(0, 0) - r(1, 1) - r(2, 2)));
      q = {(r(2, 1) - r(1, 2)) / s, 0.25 * s, (r(0, 1) + r(1, 0)) / s, (r(0, 2) + r(2, 0)) / s};
      break;
    }
    case 2: {
      const double s = 2.0 * std::sqrt(std::max(0.0, 1.0 - r(0, 0) + r(1, 1) - r(2, 2)));
      q = {(r(0, 2) - r(2, 0)) / s, (r(0, 1) + r(1, 0)) / s, 0.25 * s, (r(1, 2) + r(2, 1)) / s};
      break;
    }
    default: {
      const double s = 2.0 * std::sqrt(std::max(0.0, 1.0 - r(0, 0) - r(1, 1) + r(2, 2)));
      q = {(r(1, 0) - r(0, 1)) / s, (r(0, 2) + r(2, 0)) / s, (r(1, 2) + r(2, 1)) / s, 0.25 * s};
      break;
    }
  }
  return (1.0 / q.norm()) * q;
}

bool canonical_sign(const Quaternion& q) {
  for (double c : {q.w, q.x, q.y, q.z}) {
    if (c != 0.0) return c > 0.0;
  }
  return true;
}

}  // namespace

std::pair<UnitQuaternion, UnitQuaternion> rho_inverse_pair(const Rotation& r) {
  if (Rotation::orthonormality_defect(r.matrix()) > 1e-6) throw PreconditionError("rho_inverse_pair: not a rotation");
  Quaternion q = quaternion_of(r.matrix());
  if (!canonical_sign(q)) q = -q;
  const UnitQuaternion g = UnitQuaternion::normalize(q);
  return {g, -g};
}

double rotation_distance(const Rotation& a, const Rotation& b) {
  const Quaternion q = quaternion_of(a.matrix().transposed() * b.matrix());
  return 2.0 * std::atan2(norm(q.imaginary()), std::abs(q.w));
}

UnitQuaternion quat_exp(const Vec3& omega) {
  const double angle = norm(omega);
  const double half = 0.5 * angle;
  // sin(half)/angle, with its series near zero.
  const double k = angle < 1e-8 ? 0.5 - angle * angle / 48.0 : std::sin(half) / angle;
  return UnitQuaternion::normalize({std::cos(half), k * omega[0], k * omega[1], k * omega[2]});
}

Rotation exp_so3(const Vec3& omega) { return rho(quat_exp(omega)); }

Vec3 log_so3(const Rotation& r) {
  Quaternion q = quaternion_of(r.matrix());
  if (q.w < 0.0) q = -q;
  const Vec3 im = q.imaginary();
  const double s = norm(im);
  if (s < 1e-300) return {0.0, 0.0, 0.0};
  const double angle = 2.0 * std::atan2(s, q.w);
  return (angle / s) * im;
}

UnitQuaternion sample_unit_quaternion(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const Quaternion q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    if (q.norm() > 1e-12) return UnitQuaternion::normalize(q);
  }
}

Rotation sample_rotation(Rng& rng) { return rho(sample_unit_quaternion(rng)); }

}  // namespace asdglue
