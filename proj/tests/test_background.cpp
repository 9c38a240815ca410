#include <doctest.h>

#include <nlohmann/json.hpp>

#include "asdglue/background.hpp"
#include "asdglue/error.hpp"
#include "support.hpp"

using namespace asdglue;

namespace {

// Direct sum over all ordered index pairs with the symmetric coefficient split.
Mat3 eval_direct(const BackgroundField& f, const Point4& x) {
  const std::array<double, 4> c{x.x0, x.x1, x.x2, x.x3};
  Mat3 out = f.constant;
  if (f.degree >= 1)
    for (std::size_t a = 0; a < 4; ++a) out += c[a] * f.linear[a];
  if (f.degree >= 2)
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        const double w = a == b ? 1.0 : 0.5;
        out += (w * c[a] * c[b]) * f.quadratic[quadratic_index(a, b)];
      }
  return out;
}

}  // namespace

TEST_CASE("quadratic coefficient layout") {
  std::array<int, 10> hits{};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a; b < 4; ++b) ++hits[quadratic_index(a, b)];
  for (int h : hits) CHECK(h == 1);
  CHECK(quadratic_index(3, 1) == quadratic_index(1, 3));
  CHECK(quadratic_index(0, 0) == 0);
  CHECK(quadratic_index(3, 3) == 9);
}

TEST_CASE("make_background is deterministic and seed dependent") {
  const TwoPointConfig c(0.1);
  const BackgroundField a = make_background(17, 2, 1.0, c), b = make_background(17, 2, 1.0, c);
  CHECK(a.constant == b.constant);
  CHECK(a.quadratic == b.quadratic);
  CHECK(a.linear == b.linear);
  CHECK_FALSE(make_background(18, 2, 1.0, c).constant == a.constant);
  for (const Mat3& m : a.quadratic)
    for (double x : m.e) CHECK(std::abs(x) <= 1.0);
  const BackgroundField big = make_background(17, 2, 3.0, c);
  CHECK(max_abs_diff(big.constant, 3.0 * a.constant) < 1e-15);
}

TEST_CASE("evaluation") {
  const TwoPointConfig c(0.1);
  Rng rng(71);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int degree : {0, 1, 2}) {
    const BackgroundField f = make_background(5, degree, 1.0, c);
    for (int k = 0; k < 200; ++k) {
      const Point4 x{u(rng), u(rng), u(rng), u(rng)};
      REQUIRE(max_abs_diff(eval_background(f, x), eval_direct(f, x)) < 1e-13);
      if (degree == 0) REQUIRE(eval_background(f, x) == f.constant);
    }
  }
  CHECK(eval_background(constant_background(Mat3::diag(3, 2, 1)), {5, 6, 7, 8}) == Mat3::diag(3, 2, 1));
}

TEST_CASE("random fields are generic at p and q on the first attempt") {
  const TwoPointConfig c(0.1);
  int first = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const BackgroundField f = make_background(seed, 2, 1.0, c);
    first += f.attempt == 0;
    REQUIRE(classify_stratum(eval_background(f, c.p())).tag == StratumTag::Generic);
  }
  CHECK(first >= 990);
}

TEST_CASE("one field covers several configurations") {
  const std::vector<TwoPointConfig> cs{TwoPointConfig(0.2), TwoPointConfig(0.1), TwoPointConfig(0.05)};
  const BackgroundField f = make_background(3, 2, 1.0, cs);
  for (const TwoPointConfig& c : cs) CHECK_NOTHROW(targets(f, c));
}

TEST_CASE("targets for a constant field") {
  const BackgroundField f = constant_background(Mat3::diag(3, 2, 1));
  const TargetData t = targets(f, TwoPointConfig(0.1));
  CHECK(t.s_p == doctest::Approx(2.0));
  CHECK(t.s_q == doctest::Approx(2.0));
  CHECK_FALSE(t.q_swapped);
  CHECK(t.matched_distance < 1e-12);
  for (int k = 0; k < 2; ++k) CHECK(rotation_distance(t.m_p[k], t.m_q[k]) < 1e-12);
  CHECK(t.labeling_margin > 1.0);
  for (double r : t.residual_p) CHECK(r < 1e-12);
}

TEST_CASE("target data moves at first order in L") {
  std::vector<double> Ls, ds, dm;
  const std::vector<double> grid{0.1, 0.05, 0.025, 0.0125, 0.00625};
  std::vector<TwoPointConfig> cs;
  for (double L : grid) cs.emplace_back(L);
  const BackgroundField f = make_background(9, 2, 1.0, cs);
  for (const TwoPointConfig& c : cs) {
    const TargetData t = targets(f, c);
    Ls.push_back(c.L());
    ds.push_back(std::abs(t.s_p - t.s_q));
    dm.push_back(rotation_distance(t.m_p[0], t.m_q[0]) + rotation_distance(t.m_p[1], t.m_q[1]));
    CHECK(t.labeling_margin > t.matched_distance);
  }
  CHECK(testing::loglog_slope(Ls, ds) == doctest::Approx(1.0).epsilon(0.1));
  CHECK(testing::loglog_slope(Ls, dm) == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("labels follow a continuous path in L") {
  const BackgroundField f = make_background(11, 2, 1.0, TwoPointConfig(0.1));
  TargetData prev = targets(f, TwoPointConfig(0.1));
  for (int k = 1; k <= 200; ++k) {
    const double L = 0.1 * (1.0 - 0.0049 * k);
    const TargetData t = targets(f, TwoPointConfig(L));
    for (int i = 0; i < 2; ++i) {
      REQUIRE(rotation_distance(prev.m_p[i], t.m_p[i]) < 0.05);
      REQUIRE(rotation_distance(prev.m_q[i], t.m_q[i]) < 0.05);
    }
    prev = t;
  }
}

TEST_CASE("json round trip") {
  for (int degree : {0, 1, 2}) {
    const BackgroundField f = make_background(21, degree, 0.7, TwoPointConfig(0.1));
    const nlohmann::json j = f;
    CHECK(j.contains("linear") == (degree >= 1));
    CHECK(j.contains("quadratic") == (degree >= 2));
    const BackgroundField g = nlohmann::json::parse(j.dump()).get<BackgroundField>();
    CHECK(g.constant == f.constant);
    CHECK(g.linear == f.linear);
    CHECK(g.quadratic == f.quadratic);
    CHECK(g.seed == f.seed);
    CHECK(g.attempt == f.attempt);
    CHECK(g.amplitude == f.amplitude);
  }
  nlohmann::json bad = make_background(21, 2, 1.0, TwoPointConfig(0.1));
  bad["linear"].erase(0);
  CHECK_THROWS_AS(bad.get<BackgroundField>(), PreconditionError);
}

TEST_CASE("errors") {
  const TwoPointConfig c(0.1);
  CHECK_THROWS_AS(make_background(1, 2, 0.0, c), PreconditionError);
  CHECK_THROWS_AS(make_background(1, 2, -1.0, c), PreconditionError);
  CHECK_THROWS_AS(make_background(1, 3, 1.0, c), PreconditionError);
  CHECK_THROWS_AS(make_background(1, -1, 1.0, c), PreconditionError);
  CHECK_THROWS_AS(make_background(1, 2, 1.0, c, 0.49), DegenerateTarget);
  CHECK_THROWS_AS(targets(constant_background(5.0 * Mat3::identity()), c), DegenerateTarget);
}
