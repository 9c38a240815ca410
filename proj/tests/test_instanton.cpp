#include <doctest.h>

#include "asdglue/error.hpp"
#include "asdglue/instanton.hpp"
#include "support.hpp"

using namespace asdglue;

namespace {

Point4 random_point(Rng& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng), u(rng)};
}

double qnorm(const Quaternion& q) { return std::sqrt(dot(q, q)); }

}  // namespace

TEST_CASE("magnitude") {
  const StdInstanton inst{{0, 0, 0, 0}, 0.5, Rotation::identity()};
  CHECK(magnitude(inst, {0, 0, 0, 0}) == doctest::Approx(4.0));
  CHECK(magnitude(inst, {0.5, 0, 0, 0}) == doctest::Approx(0.25 / 0.25));
  CHECK(magnitude(inst, {0, 0, 3, 4}) == doctest::Approx(0.25 / std::pow(25.25, 2)));

  SUBCASE("as a function of the scale it peaks at lambda = r") {
    for (double r : {0.01, 0.3, 2.0}) {
      const Point4 x{0, r, 0, 0};
      auto at = [&](double lam) { return magnitude({{0, 0, 0, 0}, lam, Rotation::identity()}, x); };
      CHECK(at(r) == doctest::Approx(1.0 / (4 * r * r)));
      CHECK(at(r) > at(0.99 * r));
      CHECK(at(r) > at(1.01 * r));
    }
  }
}

TEST_CASE("exterior gauge curvature") {
  Rng rng(61);
  SUBCASE("equals the gauge transform of the regular form") {
    for (int k = 0; k < 1000; ++k) {
      const StdInstanton inst{random_point(rng, 1.0), 0.3, Rotation::identity()};
      const Point4 x = random_point(rng, 1.0);
      const Rotation phi = rho(UnitQuaternion::normalize((x - inst.center).as_quaternion()));
      const Mat3 expect = phi.matrix() * f_std_regular_gauge(inst, x);
      REQUIRE(max_abs_diff(f_std(inst, x), expect) <= 1e-13 * magnitude(inst, x) + 1e-300);
    }
  }
  SUBCASE("gluing angle acts on the left by its inverse") {
    for (int k = 0; k < 1000; ++k) {
      const Rotation m = sample_rotation(rng);
      const Point4 c = random_point(rng, 1.0), x = random_point(rng, 1.0);
      const StdInstanton a{c, 0.2, Rotation::identity()}, b{c, 0.2, m};
      REQUIRE(max_abs_diff(f_std(b, x), m.inverse().matrix() * f_std(a, x)) < 1e-12 * magnitude(a, x));
    }
  }
  SUBCASE("sigma values are magnitude times one") {
    const StdInstanton inst{{0.1, 0.2, -0.3, 0.4}, 0.7, sample_rotation(rng)};
    const Point4 x{1, 1, 1, 1};
    const Vec3 s = svd(f_std(inst, x)).sigma;
    for (double v : s) CHECK(v == doctest::Approx(magnitude(inst, x)).epsilon(1e-12));
  }
  SUBCASE("singular at the center") {
    const StdInstanton inst{{1, 2, 3, 4}, 0.5, Rotation::identity()};
    CHECK_THROWS_AS(f_std(inst, {1, 2, 3, 4}), GaugeSingularity);
    CHECK_NOTHROW(f_std(inst, {1, 2, 3, 4 + 1e-6}));
  }
}

TEST_CASE("two-point configuration") {
  CHECK_THROWS_AS(TwoPointConfig(0.0), PreconditionError);
  CHECK_THROWS_AS(TwoPointConfig(-1.0), PreconditionError);
  CHECK_THROWS_AS(TwoPointConfig(std::nan("")), PreconditionError);
  const TwoPointConfig c(0.25);
  CHECK(c.p() == Point4{0.25, 0, 0, 0});
  CHECK(c.q() == Point4{-0.25, 0, 0, 0});
}

TEST_CASE("gauge transition between the two marked points") {
  const TwoPointConfig cfg(0.1);
  SUBCASE("special points") {
    const UnitQuaternion mid = g_map(cfg, {0, 0, 0, 0});
    CHECK(mid.w() == doctest::Approx(-1.0));
    CHECK(g_map(cfg, {1.0, 0, 0, 0}).w() == doctest::Approx(1.0));
    CHECK(g_map(cfg, {-1.0, 0, 0, 0}).w() == doctest::Approx(1.0));
    CHECK_THROWS_AS(g_map(cfg, cfg.p()), PreconditionError);
    CHECK_THROWS_AS(g_map(cfg, cfg.q()), PreconditionError);
  }
  SUBCASE("matches the product of the two radial directions") {
    Rng rng(62);
    for (int k = 0; k < 1000; ++k) {
      const Point4 y = random_point(rng, 0.5);
      const UnitQuaternion up = UnitQuaternion::normalize((y - cfg.p()).as_quaternion());
      const UnitQuaternion uq = UnitQuaternion::normalize((y - cfg.q()).as_quaternion());
      const UnitQuaternion g = g_map(cfg, y);
      REQUIRE(qnorm(g.value() - (up.inverse() * uq).value()) < 1e-13);
      REQUIRE(max_abs_diff(rho(g).matrix(), (rho(up).inverse() * rho(uq)).matrix()) < 1e-12);
    }
  }
}

TEST_CASE("expansions of g on the mid-plane") {
  const TwoPointConfig cfg(0.05);
  const Vec3 dir = [] {
    const Vec3 v{0.3, -0.8, 0.5};
    return (1.0 / norm(v)) * v;
  }();
  auto err = [&](const Vec3& y, const Quaternion& approx) {
    return qnorm(g_map(cfg, Point4::from_parts(0.0, y)).value() - approx);
  };

  SUBCASE("near the midpoint: quadratic remainder with constant 2") {
    std::vector<double> t, e;
    for (int k = 0; k < 6; ++k) {
      const double r = cfg.L() * std::pow(2.0, -3 - k);
      const Vec3 y = r * dir;
      t.push_back(r / cfg.L());
      e.push_back(err(y, g_near_expansion(cfg, y)));
    }
    CHECK(testing::loglog_slope(t, e) == doctest::Approx(2.0).epsilon(0.05));
    for (std::size_t k = 0; k < t.size(); ++k) CHECK(e[k] / (t[k] * t[k]) == doctest::Approx(2.0).epsilon(0.05));
  }
  SUBCASE("the opposite sign of the linear term leaves a first-order error") {
    std::vector<double> t, e;
    for (int k = 0; k < 6; ++k) {
      const double r = cfg.L() * std::pow(2.0, -3 - k);
      const Vec3 y = r * dir;
      const double c = 2.0 / cfg.L();
      t.push_back(r / cfg.L());
      e.push_back(err(y, {-1.0, c * y[0], c * y[1], c * y[2]}));
    }
    CHECK(testing::loglog_slope(t, e) == doctest::Approx(1.0).epsilon(0.05));
  }
  SUBCASE("far away: quadratic remainder in L / |y|") {
    std::vector<double> t, e;
    for (int k = 0; k < 6; ++k) {
      const double r = cfg.L() * std::pow(2.0, 3 + k);
      const Vec3 y = r * dir;
      t.push_back(cfg.L() / r);
      e.push_back(err(y, g_far_expansion(cfg, y)));
    }
    CHECK(testing::loglog_slope(t, e) == doctest::Approx(2.0).epsilon(0.05));
    for (std::size_t k = 0; k < t.size(); ++k) CHECK(e[k] / (t[k] * t[k]) == doctest::Approx(2.0).epsilon(0.05));
  }
}
