#include "asdglue/defect_chart.hpp"

#include <cmath>
#include <tuple>
#include <utility>

namespace asdglue {

namespace {

// Orthonormal pair spanning the complement of unit vector n: Gram-Schmidt
// against the reference axis least aligned with n (lowest index on ties),
// then the cross product.
std::pair<Vec3, Vec3> complement_frame(const Vec3& n) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < 3; ++k)
    if (std::abs(n[k]) < std::abs(n[best])) best = k;
  Vec3 e{0, 0, 0};
  e[best] = 1.0;
  Vec3 a = e - dot(n, e) * n;
  a = (1.0 / norm(a)) * a;
  return {a, cross(n, a)};
}

}  // namespace

DefectChart DefectChart::at(const Mat3& base) {
  const SvdTriple s = svd(base);
  DefectChart chart;
  chart.u1_ = s.u.column(0);
  chart.v1_ = s.v.column(0);
  std::tie(chart.a_, chart.b_) = complement_frame(chart.u1_);
  std::tie(chart.c_, chart.d_) = complement_frame(chart.v1_);
  return chart;
}

std::array<double, 4> DefectChart::operator()(const Mat3& f) const {
  const Vec3 fc = f * c_;
  const Vec3 fd = f * d_;
  return {dot(a_, fc), dot(a_, fd), dot(b_, fc), dot(b_, fd)};
}

double rank_one_defect_sq(const SvdTriple& s) { return s.sigma[1] * s.sigma[1] + s.sigma[2] * s.sigma[2]; }

}  // namespace asdglue
