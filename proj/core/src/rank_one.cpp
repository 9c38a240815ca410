#include "asdglue/rank_one.hpp"

#include <algorithm>
#include <cmath>

#include "asdglue/defect_chart.hpp"
#include "asdglue/error.hpp"
#include "levenberg_marquardt.hpp"

namespace asdglue {

namespace {

Rotation half_turn(const Vec3& n) {
  return Rotation::from_matrix(2.0 * Mat3::outer(n, n) - Mat3::identity(), 1e-9);
}

RankOnePair certify(const Mat3& p, double s, const Rotation& m) {
  return {s, m, sigma2(p + s * m.matrix())};
}

}  // namespace

Vec3 reduced_axis(const Vec3& sigma, int det_sign) {
  const auto [s1, s2, s3] = sigma;
  const double c = det_sign < 0 ? -s3 : s3;
  const double den = 2.0 * s2 * (s1 - c);
  double n1sq = den > 0.0 ? (s1 - s2) * (s2 + c) / den : 0.0;
  n1sq = std::clamp(n1sq, 0.0, 1.0);
  return {std::sqrt(n1sq), 0.0, std::sqrt(1.0 - n1sq)};
}

std::vector<Rotation> solve_rank_one_reduced(const Vec3& sigma, int det_sign) {
  if (!(sigma[0] > sigma[1] && sigma[1] > sigma[2] && sigma[2] >= 0.0))
    throw PreconditionError("solve_rank_one_reduced: singular values must satisfy s1 > s2 > s3 >= 0");
  if (det_sign != 1 && det_sign != -1) throw PreconditionError("solve_rank_one_reduced: det_sign must be +-1");
  const Vec3 n = reduced_axis(sigma, det_sign);
  return {half_turn(n), half_turn({-n[0], n[1], n[2]})};
}

LemmaOutcome solve_rank_one(const Mat3& p, double rel_tol) {
  LemmaOutcome out;
  out.stratum = classify_stratum(p, rel_tol);
  const StratumTag tag = out.stratum.tag;
  if (tag != StratumTag::Generic && tag != StratumTag::TopPairEqual && tag != StratumTag::BottomPairEqual) {
    out.kind = LemmaKind::Degenerate;
    return out;
  }

  const SvdTriple sv = svd_signed(p);
  const double s = sv.sigma[1];
  const Mat3 vt = sv.v.transposed();
  auto lift = [&](const Vec3& n) { return Rotation::from_matrix(sv.u * half_turn(n).matrix() * vt, 1e-9); };

  const Vec3 n = reduced_axis(sv.sigma, sv.det_sign);
  out.pairs.push_back(certify(p, s, lift(n)));
  if (tag == StratumTag::Generic) {
    out.kind = LemmaKind::TwoDistinct;
    out.pairs.push_back(certify(p, s, lift({-n[0], n[1], n[2]})));
  } else {
    out.kind = LemmaKind::DoubleRoot;
  }
  return out;
}

namespace {

// Residual: the transverse block of P + s R in the chart at the current
// iterate. Unknowns: R_k * exp(omega).
struct RankOneModel {
  const Mat3& p;
  double s;
  double converged_abs;

  DefectChart frame(const Rotation& r) const { return DefectChart::at(p + s * r.matrix()); }
  bool residual(const Rotation& r, const DefectChart& chart, Eigen::Vector4d& out) const {
    const auto blk = chart(p + s * r.matrix());
    out << blk[0], blk[1], blk[2], blk[3];
    return true;
  }
  Rotation retract(const Rotation& r, const Eigen::Vector3d& w) const { return r * exp_so3({w(0), w(1), w(2)}); }
  double merit(const Rotation& r) const { return rank_one_defect_sq(svd(p + s * r.matrix())); }
  bool converged(const Rotation& r) const { return std::sqrt(merit(r)) <= converged_abs; }
};

}  // namespace

std::vector<RankOnePair> oracle_rank_one(const Mat3& p, std::size_t n_starts, Rng& rng,
                                         const RankOneOracleOptions& opts) {
  const Stratum st = classify_stratum(p);
  if (st.tag != StratumTag::Generic) throw PreconditionError("oracle_rank_one: input must be Generic");
  const double s1 = st.sigma[0];
  const double s = st.sigma[1];
  RankOneModel model{p, s, 1e-13 * s1};
  detail::LmSettings settings;
  settings.max_iters = opts.max_iters;

  std::vector<RankOnePair> found;
  for (std::size_t k = 0; k < n_starts; ++k) {
    const Rotation start = sample_rotation(rng);
    const auto res = detail::levenberg_marquardt<3, 4>(start, model, settings);
    const double r2 = sigma2(p + s * res.x.matrix());
    if (!(r2 < opts.accept_rel * s1)) continue;
    const bool dup = std::any_of(found.begin(), found.end(), [&](const RankOnePair& q) {
      return rotation_distance(q.m, res.x) < opts.dedupe_angle;
    });
    if (!dup) found.push_back({s, res.x, r2});
  }

  std::sort(found.begin(), found.end(), [](const RankOnePair& a, const RankOnePair& b) {
    return rotation_distance(Rotation::identity(), a.m) < rotation_distance(Rotation::identity(), b.m);
  });
  if (n_starts >= 1000 && found.size() < 2)
    throw OracleInconclusive("oracle_rank_one: fewer than two distinct minima");
  return found;
}

}  // namespace asdglue
