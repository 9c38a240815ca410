#include <doctest.h>

#include <numbers>

#include "asdglue/error.hpp"
#include "asdglue/rotations.hpp"
#include "support.hpp"

using namespace asdglue;

namespace {

double qdist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

}  // namespace

TEST_CASE("Hamilton product") {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(i * i == Quaternion::real(-1));
  const double h = 1.0 / std::sqrt(2.0);
  CHECK(qdist(Quaternion{h, h, 0, 0} * Quaternion{h, h, 0, 0}, i) < 1e-15);
  Rng rng(21);
  for (int n = 0; n < 1000; ++n) {
    const auto a = sample_unit_quaternion(rng), b = sample_unit_quaternion(rng);
    REQUIRE(std::abs((a.value() * b.value()).norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("unit quaternion normalization") {
  CHECK_THROWS_AS(UnitQuaternion::normalize({0, 0, 0, 0}), PreconditionError);
  CHECK(std::abs(UnitQuaternion::normalize({3, 0, 4, 0}).value().norm() - 1.0) < 1e-15);
}

TEST_CASE("double cover at special points") {
  CHECK(max_abs_diff(rho(UnitQuaternion()).matrix(), Mat3::identity()) == 0.0);
  const auto i = UnitQuaternion::normalize({0, 1, 0, 0});
  CHECK(max_abs_diff(rho(i).matrix(), Mat3::diag(1, -1, -1)) < 1e-15);
  Rng rng(22);
  for (int n = 0; n < 100; ++n) {
    const auto g = sample_unit_quaternion(rng);
    REQUIRE(rho(g).matrix() == rho(-g).matrix());
  }
}

TEST_CASE("columns of rho(g) are the conjugates of i, j, k") {
  Rng rng(23);
  const std::array<Quaternion, 3> basis{Quaternion{0, 1, 0, 0}, Quaternion{0, 0, 1, 0}, Quaternion{0, 0, 0, 1}};
  for (int n = 0; n < 1000; ++n) {
    const UnitQuaternion g = sample_unit_quaternion(rng);
    const Mat3 r = rho(g).matrix();
    for (std::size_t c = 0; c < 3; ++c) {
      const Quaternion conj = g.value() * basis[c] * g.value().conj();
      REQUIRE(std::abs(conj.w) < 1e-14);
      const Vec3 col = r.column(static_cast<int>(c));
      for (std::size_t k = 0; k < 3; ++k) REQUIRE(std::abs(col[k] - conj.imaginary()[k]) < 1e-14);
    }
  }
}

TEST_CASE("rho is a homomorphism into SO(3)") {
  Rng rng(24);
  for (int n = 0; n < 10000; ++n) {
    const auto a = sample_unit_quaternion(rng), b = sample_unit_quaternion(rng);
    const Mat3 lhs = rho(a * b).matrix();
    REQUIRE(max_abs_diff(lhs, rho(a).matrix() * rho(b).matrix()) <= 1e-12);
    REQUIRE(Rotation::orthonormality_defect(lhs) <= 1e-12);
  }
}

TEST_CASE("half-turn formula") {
  Rng rng(25);
  std::normal_distribution<double> gauss;
  for (int n = 0; n < 1000; ++n) {
    Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
    v = (1.0 / norm(v)) * v;
    const Mat3 half = 2.0 * Mat3::outer(v, v) - Mat3::identity();
    REQUIRE(max_abs_diff(half, rho(UnitQuaternion::normalize(Quaternion::pure(v))).matrix()) <= 1e-12);
  }
}

TEST_CASE("inverse of the double cover") {
  SUBCASE("identity") {
    const auto [a, b] = rho_inverse_pair(Rotation::identity());
    CHECK(a.value() == Quaternion::real(1));
    CHECK(b.value() == Quaternion::real(-1));
  }
  SUBCASE("half turn about i") {
    const auto [a, b] = rho_inverse_pair(Rotation::from_matrix(Mat3::diag(1, -1, -1)));
    CHECK(qdist(a.value(), {0, 1, 0, 0}) < 1e-15);
    CHECK(qdist(b.value(), {0, -1, 0, 0}) < 1e-15);
  }
  SUBCASE("round trip and canonical sign") {
    Rng rng(26);
    for (int n = 0; n < 1000; ++n) {
      const Rotation r = sample_rotation(rng);
      const auto [a, b] = rho_inverse_pair(r);
      REQUIRE(max_abs_diff(rho(a).matrix(), r.matrix()) < 1e-9);
      REQUIRE(qdist(a.value(), -b.value()) == 0.0);
      REQUIRE(a.w() >= 0.0);
    }
  }
  SUBCASE("rejects non-rotations") {
    CHECK_THROWS_AS(Rotation::from_matrix(Mat3::diag(1, 1, -1)), PreconditionError);
    CHECK_THROWS_AS(Rotation::from_matrix(Mat3::diag(1, 1, 1.01)), PreconditionError);
  }
}

TEST_CASE("geodesic distance") {
  Rng rng(27);
  const Rotation r = sample_rotation(rng);
  CHECK(rotation_distance(r, r) < 1e-7);
  CHECK(rotation_distance(Rotation::identity(), Rotation::from_matrix(Mat3::diag(1, -1, -1))) ==
        doctest::Approx(std::numbers::pi));
  for (int n = 0; n < 100; ++n) {
    const Rotation a = sample_rotation(rng), b = sample_rotation(rng), c = sample_rotation(rng);
    REQUIRE(rotation_distance(a, c) <= rotation_distance(a, b) + rotation_distance(b, c) + 1e-12);
    REQUIRE(rotation_distance(a, b) == doctest::Approx(rotation_distance(b, a)));
  }
  CHECK(rotation_distance(Rotation::identity(), exp_so3({0.0, 0.3, 0.0})) == doctest::Approx(0.3));
}

TEST_CASE("exponential and logarithm") {
  Rng rng(28);
  for (int n = 0; n < 1000; ++n) {
    const Rotation r = sample_rotation(rng);
    REQUIRE(max_abs_diff(exp_so3(log_so3(r)).matrix(), r.matrix()) < 1e-10);
  }
  CHECK(max_abs_diff(exp_so3({0, 0, 0}).matrix(), Mat3::identity()) == 0.0);
  CHECK(max_abs_diff(exp_so3({1e-10, 0, 0}).matrix(), Mat3::identity()) < 1e-9);
}

TEST_CASE("Haar sampling") {
  Rng a(29), b(29);
  CHECK(sample_rotation(a).matrix() == sample_rotation(b).matrix());

  Rng rng(30);
  double mean = 0.0;
  constexpr int kN = 100000;
  for (int n = 0; n < kN; ++n) {
    const Rotation r = sample_rotation(rng);
    REQUIRE(Rotation::orthonormality_defect(r.matrix()) <= 1e-12);
    mean += r.matrix().trace();
  }
  mean /= kN;
  CHECK(std::abs(mean) < 0.02);
}
