#include <doctest.h>

#include <algorithm>

#include "asdglue/error.hpp"
#include "asdglue/experiment.hpp"
#include "asdglue/rank_one.hpp"
#include "support.hpp"

using namespace asdglue;

namespace {

Mat3 generic_matrix(Rng& rng) {
  for (;;) {
    const Mat3 m = testing::random_matrix(rng);
    if (classify_stratum(m).tag == StratumTag::Generic) return m;
  }
}

bool same_set(const std::vector<RankOnePair>& a, const std::vector<RankOnePair>& b, double tol) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const RankOnePair& x) {
    return std::any_of(b.begin(), b.end(), [&](const RankOnePair& y) { return rotation_distance(x.m, y.m) <= tol; });
  });
}

}  // namespace

TEST_CASE("two solutions for diag(3,2,1)") {
  const Mat3 p = Mat3::diag(3, 2, 1);
  const LemmaOutcome o = solve_rank_one(p);
  REQUIRE(o.kind == LemmaKind::TwoDistinct);
  REQUIRE(o.pairs.size() == 2);
  const double n1 = std::sqrt(3.0 / 8.0), n3 = std::sqrt(5.0 / 8.0);
  const std::array<Vec3, 2> axes{Vec3{n1, 0, n3}, Vec3{-n1, 0, n3}};
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(o.pairs[k].s == doctest::Approx(2.0).epsilon(1e-12));
    const Mat3 expect = 2.0 * Mat3::outer(axes[k], axes[k]) - Mat3::identity();
    CHECK(max_abs_diff(o.pairs[k].m.matrix(), expect) < 1e-12);
    CHECK(o.pairs[k].residual < 1e-10);
  }
}

TEST_CASE("scalar rotation multiples are degenerate") {
  const LemmaOutcome o = solve_rank_one(5.0 * Mat3::identity());
  CHECK(o.kind == LemmaKind::Degenerate);
  CHECK(o.pairs.empty());
  CHECK(o.stratum.tag == StratumTag::ScalarRotation);
}

TEST_CASE("other degenerate strata") {
  SUBCASE("equal top pair gives one double root") {
    const LemmaOutcome o = solve_rank_one(Mat3::diag(3, 3, 1));
    REQUIRE(o.kind == LemmaKind::DoubleRoot);
    REQUIRE(o.pairs.size() == 1);
    CHECK(o.pairs[0].residual < 1e-12);
  }
  SUBCASE("equal bottom pair gives one double root for either determinant sign") {
    for (double sgn : {1.0, -1.0}) {
      const LemmaOutcome o = solve_rank_one(Mat3::diag(3, 1, sgn));
      REQUIRE(o.kind == LemmaKind::DoubleRoot);
      CHECK(o.pairs[0].residual < 1e-12);
    }
  }
  SUBCASE("rank one, zero and sigma3 = 0 are reported without pairs") {
    CHECK(solve_rank_one(Mat3::outer({1, 2, 3}, {3, 2, 1})).kind == LemmaKind::Degenerate);
    CHECK(solve_rank_one(Mat3::zero()).kind == LemmaKind::Degenerate);
    CHECK(solve_rank_one(Mat3::diag(3, 2, 0)).kind == LemmaKind::Degenerate);
  }
}

TEST_CASE("reduced closed form") {
  SUBCASE("(3,2,1)") {
    const Vec3 n = reduced_axis({3, 2, 1}, 1);
    CHECK(n[0] * n[0] == doctest::Approx(3.0 / 8.0));
    CHECK(n[2] * n[2] == doctest::Approx(5.0 / 8.0));
    for (const Rotation& m : solve_rank_one_reduced({3, 2, 1}, 1))
      CHECK(sigma2(Mat3::diag(3, 2, 1) + 2.0 * m.matrix()) < 1e-12);
  }
  SUBCASE("(3,2,0) on the boundary of the generic stratum") {
    const Vec3 n = reduced_axis({3, 2, 0}, 1);
    CHECK(n[0] * n[0] == doctest::Approx(1.0 / 6.0));
    const auto ms = solve_rank_one_reduced({3, 2, 0}, 1);
    REQUIRE(ms.size() == 2);
    for (const Rotation& m : ms) CHECK(sigma2(Mat3::diag(3, 2, 0) + 2.0 * m.matrix()) < 1e-12);
    CHECK(rotation_distance(ms[0], ms[1]) > 0.1);
  }
  SUBCASE("unit axis on random sorted triples of both determinant signs") {
    Rng rng(51);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 10000; ++k) {
      std::array<double, 3> s{u(rng), u(rng), u(rng)};
      std::sort(s.begin(), s.end(), std::greater<>());
      if (!(s[0] > s[1] && s[1] > s[2])) continue;
      const int sgn = (k % 2) ? -1 : 1;
      const Vec3 n = reduced_axis({s[0], s[1], s[2]}, sgn);
      REQUIRE(n[0] * n[0] + n[2] * n[2] == doctest::Approx(1.0).epsilon(1e-14));
      const Mat3 p = Mat3::diag(s[0], s[1], sgn * s[2]);
      for (const Rotation& m : solve_rank_one_reduced({s[0], s[1], s[2]}, sgn))
        REQUIRE(sigma2(p + s[1] * m.matrix()) <= 1e-12 * s[0]);
    }
  }
  SUBCASE("precondition") {
    CHECK_THROWS_AS(solve_rank_one_reduced({2, 3, 1}, 1), PreconditionError);
    CHECK_THROWS_AS(solve_rank_one_reduced({3, 2, 2}, 1), PreconditionError);
    CHECK_THROWS_AS(solve_rank_one_reduced({3, 2, 1}, 0), PreconditionError);
  }
}

TEST_CASE("certificates on random generic matrices") {
  Rng rng(52);
  for (int k = 0; k < 2000; ++k) {
    const Mat3 p = generic_matrix(rng);
    const Vec3 sig = svd(p).sigma;
    const LemmaOutcome o = solve_rank_one(p);
    REQUIRE(o.kind == LemmaKind::TwoDistinct);
    for (const RankOnePair& pr : o.pairs) {
      const Vec3 s = svd(p + pr.s * pr.m.matrix()).sigma;
      REQUIRE(std::abs(pr.s - sig[1]) <= 1e-9 * sig[1]);
      REQUIRE(s[1] <= 1e-9 * sig[0]);
      REQUIRE(s[0] >= 0.5 * (sig[0] - sig[1]));
      REQUIRE((p + pr.s * pr.m.matrix()).frobenius() > 0.0);
    }
    REQUIRE(rotation_distance(o.pairs[0].m, o.pairs[1].m) > 1e-6);
  }
}

TEST_CASE("equivariance under rotations on both sides") {
  Rng rng(53);
  for (int k = 0; k < 500; ++k) {
    const Mat3 p = generic_matrix(rng);
    const Rotation r = sample_rotation(rng), s = sample_rotation(rng);
    const LemmaOutcome a = solve_rank_one(p);
    const LemmaOutcome b = solve_rank_one(r.matrix() * p * s.matrix().transposed());
    REQUIRE(b.pairs.size() == 2);
    std::vector<RankOnePair> moved;
    for (const RankOnePair& x : a.pairs) moved.push_back({x.s, r * x.m * s.inverse(), 0.0});
    REQUIRE(same_set(moved, b.pairs, 1e-8));
    REQUIRE(a.pairs[0].s == doctest::Approx(b.pairs[0].s).epsilon(1e-12));
  }
}

TEST_CASE("coalescence along degenerating families") {
  std::vector<double> top, bottom;
  for (int k = 1; k <= 6; ++k) {
    const double eps = std::pow(10.0, -k);
    top.push_back(coalescence_separation(eps));
    const LemmaOutcome o = solve_rank_one(Mat3::diag(3, 1 + eps, 1));
    bottom.push_back(rotation_distance(o.pairs[0].m, o.pairs[1].m));
  }
  for (std::size_t k = 1; k < top.size(); ++k) {
    CHECK(top[k] < top[k - 1]);
    CHECK(bottom[k] < bottom[k - 1]);
  }
  CHECK(top.back() < 1e-2);
  CHECK(bottom.back() < 1e-2);
}

TEST_CASE("multi-start oracle") {
  SUBCASE("diag(3,2,1)") {
    Rng rng(54);
    const Mat3 p = Mat3::diag(3, 2, 1);
    const auto orc = oracle_rank_one(p, 1000, rng);
    REQUIRE(orc.size() == 2);
    CHECK(same_set(orc, solve_rank_one(p).pairs, 1e-6));
  }
  SUBCASE("random generic inputs") {
    Rng rng(55);
    for (int k = 0; k < 100; ++k) {
      const Mat3 p = generic_matrix(rng);
      REQUIRE(same_set(oracle_rank_one(p, 1000, rng), solve_rank_one(p).pairs, 1e-6));
    }
  }
  SUBCASE("near the equal-top-pair stratum") {
    Rng rng(56);
    const double gap = 1e-3;
    const Mat3 p = Mat3::diag(2 + gap, 2, 1);
    const auto orc = oracle_rank_one(p, 1000, rng);
    REQUIRE(orc.size() == 2);
    const double d = rotation_distance(orc[0].m, orc[1].m);
    CHECK(d == doctest::Approx(coalescence_separation(gap)).epsilon(1e-4));
    CHECK(d > 0.3 * std::sqrt(gap));
    CHECK(d < 10.0 * std::sqrt(gap));
  }
  SUBCASE("sorted by angle to the identity and deterministic") {
    Rng a(57), b(57);
    const Mat3 p = Mat3::diag(3, 2, 1) + 0.1 * Mat3::outer({1, 2, 3}, {0, 1, 0});
    const auto x = oracle_rank_one(p, 300, a);
    const auto y = oracle_rank_one(p, 300, b);
    REQUIRE(x.size() == y.size());
    for (std::size_t k = 0; k < x.size(); ++k) CHECK(x[k].m.matrix() == y[k].m.matrix());
    for (std::size_t k = 1; k < x.size(); ++k)
      CHECK(rotation_distance(Rotation::identity(), x[k - 1].m) <= rotation_distance(Rotation::identity(), x[k].m));
  }
  SUBCASE("rejects non-generic input") {
    Rng rng(58);
    CHECK_THROWS_AS(oracle_rank_one(Mat3::identity(), 10, rng), PreconditionError);
  }
}
