#include "asdglue/linalg3.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace asdglue {

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  return Mat3{{c0[0], c1[0], c2[0], c0[1], c1[1], c2[1], c0[2], c1[2], c2[2]}};
}

Mat3 Mat3::from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  return Mat3{{r0[0], r0[1], r0[2], r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]}};
}

Mat3 Mat3::outer(const Vec3& a, const Vec3& b) {
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = a[static_cast<std::size_t>(r)] * b[static_cast<std::size_t>(c)];
  return m;
}

Mat3 Mat3::transposed() const {
  const Mat3& m = *this;
  return Mat3{{m(0, 0), m(1, 0), m(2, 0), m(0, 1), m(1, 1), m(2, 1), m(0, 2), m(1, 2), m(2, 2)}};
}

double Mat3::det() const {
  const Mat3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double Mat3::max_abs() const {
  double out = 0.0;
  for (double x : e) out = std::max(out, std::abs(x));
  return out;
}

double Mat3::frobenius() const {
  double s = 0.0;
  for (double x : e) s += x * x;
  return std::sqrt(s);
}

bool Mat3::finite() const {
  return std::all_of(e.begin(), e.end(), [](double x) { return std::isfinite(x); });
}

Mat3& Mat3::operator+=(const Mat3& o) {
  for (std::size_t i = 0; i < 9; ++i) e[i] += o.e[i];
  return *this;
}

Mat3& Mat3::operator-=(const Mat3& o) {
  for (std::size_t i = 0; i < 9; ++i) e[i] -= o.e[i];
  return *this;
}

Mat3& Mat3::operator*=(double s) {
  for (double& x : e) x *= s;
  return *this;
}

Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
Mat3 operator-(const Mat3& a) { return -1.0 * a; }
Mat3 operator*(double s, Mat3 a) { return a *= s; }

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return out;
}

Vec3 operator*(const Mat3& a, const Vec3& v) { return {dot(a.row(0), v), dot(a.row(1), v), dot(a.row(2), v)}; }

std::ostream& operator<<(std::ostream& os, const Mat3& m) {
  os << '[';
  for (int r = 0; r < 3; ++r) {
    os << (r ? "; " : "") << m(r, 0) << ' ' << m(r, 1) << ' ' << m(r, 2);
  }
  return os << ']';
}

double max_abs_diff(const Mat3& a, const Mat3& b) { return (a - b).max_abs(); }

Mat3 SvdTriple::reconstruct() const { return u * Mat3::diag(middle[0], middle[1], middle[2]) * v.transposed(); }

namespace {

constexpr int kMaxSweeps = 10;
constexpr double kEps = std::numeric_limits<double>::epsilon();

Vec3 normalized(const Vec3& a) { return (1.0 / norm(a)) * a; }

// Unit vector orthogonal to a, built from the reference axis least aligned
// with a (lowest index on ties) so the choice is deterministic.
Vec3 orthogonal_unit(const Vec3& a) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < 3; ++k)
    if (std::abs(a[k]) < std::abs(a[best])) best = k;
  Vec3 ek{0, 0, 0};
  ek[best] = 1.0;
  return normalized(ek - dot(a, ek) * a);
}

bool lex_greater(const Vec3& a, const Vec3& b) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

}  // namespace

namespace {

SvdTriple svd_unit(const Mat3& m) {
  // Columns of w converge to u_j * sigma_j; v accumulates the rotations.
  std::array<Vec3, 3> w{m.column(0), m.column(1), m.column(2)};
  std::array<Vec3, 3> v{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};

  constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (auto [p, q] : kPairs) {
      const double alpha = dot(w[p], w[p]);
      const double beta = dot(w[q], w[q]);
      const double gamma = dot(w[p], w[q]);
      if (gamma == 0.0 || std::abs(gamma) <= kEps * std::sqrt(alpha * beta)) continue;
      rotated = true;
      const double zeta = (beta - alpha) / (2.0 * gamma);
      const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = c * t;
      for (std::size_t i = 0; i < 3; ++i) {
        const double wp = w[p][i], wq = w[q][i];
        w[p][i] = c * wp - s * wq;
        w[q][i] = s * wp + c * wq;
        const double vp = v[p][i], vq = v[q][i];
        v[p][i] = c * vp - s * vq;
        v[q][i] = s * vp + c * vq;
      }
    }
    if (!rotated) break;
  }

  std::array<double, 3> sig{norm(w[0]), norm(w[1]), norm(w[2])};
  std::array<std::size_t, 3> order{0, 1, 2};
  // Insertion sort on three elements: descending sigma, ties by v column.
  auto before = [&](std::size_t a, std::size_t b) {
    if (sig[a] != sig[b]) return sig[a] > sig[b];
    return lex_greater(v[a], v[b]);
  };
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t j = i; j > 0 && before(order[j], order[j - 1]); --j) std::swap(order[j], order[j - 1]);

  SvdTriple out;
  std::array<Vec3, 3> uc{}, vc{};
  for (std::size_t k = 0; k < 3; ++k) {
    out.sigma[k] = sig[order[k]];
    vc[k] = v[order[k]];
    uc[k] = w[order[k]];
  }

  // Left vectors: normalize the significant columns, re-orthogonalize, then
  // complete the basis for numerically null directions.
  const double cutoff = out.sigma[0] * 64.0 * kEps;
  std::size_t rank = 0;
  while (rank < 3 && out.sigma[rank] > cutoff && out.sigma[rank] > 0.0) ++rank;
  if (rank == 0) {
    uc = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  } else {
    uc[0] = normalized(uc[0]);
    if (rank >= 2) {
      uc[1] = normalized(uc[1] - dot(uc[0], uc[1]) * uc[0]);
    } else {
      uc[1] = orthogonal_unit(uc[0]);
    }
    const Vec3 n = cross(uc[0], uc[1]);
    if (rank == 3) {
      uc[2] = dot(n, uc[2]) >= 0.0 ? n : -1.0 * n;
    } else {
      uc[2] = n;
    }
  }
  out.u = Mat3::from_columns(uc[0], uc[1], uc[2]);
  out.v = Mat3::from_columns(vc[0], vc[1], vc[2]);
  out.middle = out.sigma;
  const double du = out.u.det(), dv = out.v.det();
  out.det_sign = (out.sigma[2] > 0.0 && du * dv < 0.0) ? -1 : 1;
  return out;
}

}  // namespace

SvdTriple svd(const Mat3& m) {
  // Power-of-two rescaling keeps the squared column norms clear of
  // underflow and overflow without rounding the input.
  const double big = m.max_abs();
  if (!(big > 0.0) || !std::isfinite(big)) return svd_unit(m);
  const int e = std::ilogb(big);
  Mat3 scaled = m;
  for (double& x : scaled.e) x = std::ldexp(x, -e);
  SvdTriple out = svd_unit(scaled);
  for (double& x : out.sigma) x = std::ldexp(x, e);
  for (double& x : out.middle) x = std::ldexp(x, e);
  return out;
}

SvdTriple svd_signed(const Mat3& m) {
  SvdTriple s = svd(m);
  double third = s.sigma[2];
  if (s.u.det() < 0.0) {
    for (int r = 0; r < 3; ++r) s.u(r, 2) = -s.u(r, 2);
    third = -third;
  }
  if (s.v.det() < 0.0) {
    for (int r = 0; r < 3; ++r) s.v(r, 2) = -s.v(r, 2);
    third = -third;
  }
  s.middle = {s.sigma[0], s.sigma[1], third};
  s.det_sign = third < 0.0 ? -1 : 1;
  return s;
}

double sigma2(const Mat3& m) { return svd(m).sigma[1]; }

std::string_view to_string(StratumTag tag) {
  switch (tag) {
    case StratumTag::Generic: return "Generic";
    case StratumTag::Sigma3Zero: return "Sigma3Zero";
    case StratumTag::TopPairEqual: return "TopPairEqual";
    case StratumTag::BottomPairEqual: return "BottomPairEqual";
    case StratumTag::RankLeOne: return "RankLeOne";
    case StratumTag::ScalarRotation: return "ScalarRotation";
    case StratumTag::Zero: return "Zero";
  }
  return "?";
}

Stratum classify_stratum(const Mat3& m, double rel_tol) {
  Stratum st;
  st.rel_tol = rel_tol;
  st.sigma = svd(m).sigma;
  const auto [s1, s2, s3] = st.sigma;
  const double gap = rel_tol * s1;
  if (s1 <= st.abs_tol) {
    st.tag = StratumTag::Zero;
  } else if (s1 - s3 <= gap) {
    st.tag = StratumTag::ScalarRotation;
  } else if (s2 <= gap) {
    st.tag = StratumTag::RankLeOne;
  } else if (s1 - s2 <= gap) {
    st.tag = StratumTag::TopPairEqual;
  } else if (s2 - s3 <= gap) {
    st.tag = StratumTag::BottomPairEqual;
  } else if (s3 <= gap) {
    st.tag = StratumTag::Sigma3Zero;
  } else {
    st.tag = StratumTag::Generic;
  }
  return st;
}

}  // namespace asdglue
