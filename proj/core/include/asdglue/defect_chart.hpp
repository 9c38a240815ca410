#pragma once

#include <array>

#include "asdglue/linalg3.hpp"

namespace asdglue {

/// Local coordinates transverse to the rank-one stratum near a base matrix.
///
/// With u1, v1 the top singular vectors of the base, the chart maps F to the
/// 2x2 block [a b]^T F [c d] where (a, b) and (c, d) are orthonormal bases of
/// the complements of u1 and v1. On matrices near the base, the block
/// vanishes to first order exactly on rank-one matrices. The orientation of
/// the resulting R^4 does not depend on the complement bases, since any O(2)
/// change of frame acts on 2x2 blocks with determinant det^2 = 1.
class DefectChart {
 public:
  static DefectChart at(const Mat3& base);

  /// Row-major 2x2 block (aFc, aFd, bFc, bFd).
  std::array<double, 4> operator()(const Mat3& f) const;

  const Vec3& top_left() const { return u1_; }
  const Vec3& top_right() const { return v1_; }

 private:
  Vec3 u1_{}, v1_{};
  Vec3 a_{}, b_{}, c_{}, d_{};
};

/// sigma2^2 + sigma3^2, the squared norm of the transverse block at f itself.
double rank_one_defect_sq(const SvdTriple& s);

}  // namespace asdglue
