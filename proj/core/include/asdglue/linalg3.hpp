#pragma once

#include <array>
#include <cmath>
#include <iosfwd>
#include <string_view>

namespace asdglue {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

/// Dense 3x3 real matrix, row-major storage.
///
/// Curvature matrices use the column layout "column c = half the omega_c
/// component, row r = Lie-algebra direction r (i, j, k)".
struct Mat3 {
  std::array<double, 9> e{};

  static constexpr Mat3 zero() { return Mat3{}; }
  static constexpr Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
  static constexpr Mat3 diag(double a, double b, double c) { return Mat3{{a, 0, 0, 0, b, 0, 0, 0, c}}; }
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2);
  static Mat3 outer(const Vec3& a, const Vec3& b);

  double& operator()(int r, int c) { return e[static_cast<std::size_t>(3 * r + c)]; }
  double operator()(int r, int c) const { return e[static_cast<std::size_t>(3 * r + c)]; }

  Vec3 column(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }
  Vec3 row(int r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)}; }

  Mat3 transposed() const;
  double det() const;
  double trace() const { return e[0] + e[4] + e[8]; }
  double max_abs() const;
  double frobenius() const;
  bool finite() const;

  Mat3& operator+=(const Mat3& o);
  Mat3& operator-=(const Mat3& o);
  Mat3& operator*=(double s);

  friend bool operator==(const Mat3&, const Mat3&) = default;
};

Mat3 operator+(Mat3 a, const Mat3& b);
Mat3 operator-(Mat3 a, const Mat3& b);
Mat3 operator-(const Mat3& a);
Mat3 operator*(double s, Mat3 a);
Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);

std::ostream& operator<<(std::ostream& os, const Mat3& m);

/// Entrywise max |a - b|.
double max_abs_diff(const Mat3& a, const Mat3& b);

/// Singular value decomposition m = u * diag(middle) * v^T.
///
/// `sigma` is always sorted and nonnegative. For the plain decomposition
/// `middle == sigma` and u, v are orthogonal (either determinant). For the
/// signed decomposition det(u) = det(v) = +1 and
/// `middle = (sigma1, sigma2, det_sign * sigma3)`.
struct SvdTriple {
  Mat3 u;
  Vec3 sigma{};
  Mat3 v;
  int det_sign = 1;
  Vec3 middle{};

  Mat3 reconstruct() const;
};

/// One-sided Jacobi SVD. Ties in sigma are ordered by descending
/// lexicographic order of the matching columns of v.
SvdTriple svd(const Mat3& m);

/// As svd(), but with proper rotations on both sides and the reflection
/// absorbed into the sign of the smallest middle entry.
SvdTriple svd_signed(const Mat3& m);

double sigma2(const Mat3& m);

inline constexpr double kDefaultStratumTol = 1e-8;
inline constexpr double kZeroAbsTol = 1e-300;

enum class StratumTag { Generic, Sigma3Zero, TopPairEqual, BottomPairEqual, RankLeOne, ScalarRotation, Zero };

std::string_view to_string(StratumTag tag);

struct Stratum {
  StratumTag tag = StratumTag::Generic;
  double rel_tol = kDefaultStratumTol;
  double abs_tol = kZeroAbsTol;
  Vec3 sigma{};
};

/// Singular-value stratification with gaps measured relative to sigma1.
/// Returns the most degenerate matching tag.
Stratum classify_stratum(const Mat3& m, double rel_tol = kDefaultStratumTol);

}  // namespace asdglue
