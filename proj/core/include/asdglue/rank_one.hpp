#pragma once

#include <cstddef>
#include <vector>

#include "asdglue/linalg3.hpp"
#include "asdglue/rotations.hpp"

namespace asdglue {

/// (s, M) with P + s M of rank one. `residual` is sigma2(P + s M).
struct RankOnePair {
  double s = 0.0;
  Rotation m;
  double residual = 0.0;
};

enum class LemmaKind { TwoDistinct, DoubleRoot, Degenerate };

struct LemmaOutcome {
  LemmaKind kind = LemmaKind::Degenerate;
  std::vector<RankOnePair> pairs;
  Stratum stratum;
};

/// Rank-one completion of P by a positive multiple of a rotation.
///
/// Generic P gives two pairs, both with s = sigma2(P). They are listed with
/// the solution whose reduced axis has n1 >= 0 first. A shared nonzero pair
/// of singular values gives a single DoubleRoot pair. Every other stratum
/// is reported as Degenerate with no pairs.
LemmaOutcome solve_rank_one(const Mat3& p, double rel_tol = kDefaultStratumTol);

/// Closed form in signed-SVD coordinates P = diag(s1, s2, det_sign * s3):
/// M' = 2 n n^T - I with n = (+-n1, 0, n3),
///   n1^2 = (s1 - s2)(s2 + c) / (2 s2 (s1 - c)),  c = det_sign * s3.
/// Requires s1 > s2 > s3 >= 0. The n1 >= 0 solution comes first.
std::vector<Rotation> solve_rank_one_reduced(const Vec3& sigma, int det_sign);

/// The axis n of the n1 >= 0 solution above (entries clamped into [0, 1]
/// so the coalesced limits are well defined).
Vec3 reduced_axis(const Vec3& sigma, int det_sign);

struct RankOneOracleOptions {
  double accept_rel = 1e-9;    // minimum accepted when sigma2 < accept_rel * sigma1(P)
  double dedupe_angle = 1e-4;  // geodesic distance for merging minima
  int max_iters = 100;
};

/// Multi-start Levenberg-Marquardt over rotations for
/// sigma2(P + sigma2(P) * R) = 0, started from Haar-random rotations.
/// Returns the distinct minima sorted by angle to the identity.
/// Throws OracleInconclusive when n_starts >= 1000 and fewer than two
/// distinct minima were found.
std::vector<RankOnePair> oracle_rank_one(const Mat3& p, std::size_t n_starts, Rng& rng,
                                         const RankOneOracleOptions& opts = {});

}  // namespace asdglue
