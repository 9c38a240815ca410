#pragma once

#include <array>
#include <cstdint>
#include <span>

#include <nlohmann/json_fwd.hpp>

#include "asdglue/instanton.hpp"
#include "asdglue/rank_one.hpp"

namespace asdglue {

/// Polynomial background curvature
///   F0(x) = A + sum_a B_a x_a + sum_{a <= b} C_ab x_a x_b
/// of degree 0, 1 or 2. Quadratic coefficients are stored for a <= b in the
/// order (0,0) (0,1) (0,2) (0,3) (1,1) (1,2) (1,3) (2,2) (2,3) (3,3).
struct BackgroundField {
  int degree = 2;
  std::uint64_t seed = 0;
  int attempt = 0;  // retry index that produced the coefficients
  double amplitude = 1.0;
  Mat3 constant;
  std::array<Mat3, 4> linear{};
  std::array<Mat3, 10> quadratic{};
};

inline constexpr int kMaxBackgroundRetries = 100;

/// Index of C_ab (a <= b) in BackgroundField::quadratic.
std::size_t quadratic_index(std::size_t a, std::size_t b);

/// Coefficients i.i.d. uniform in [-amplitude, amplitude], deterministic in
/// (seed, attempt). Retries with the next attempt until F0 is Generic at p
/// and q of every configuration; throws DegenerateTarget after
/// kMaxBackgroundRetries attempts and PreconditionError for bad arguments.
BackgroundField make_background(std::uint64_t seed, int degree, double amplitude,
                                std::span<const TwoPointConfig> configs, double rel_tol = kDefaultStratumTol);
BackgroundField make_background(std::uint64_t seed, int degree, double amplitude, const TwoPointConfig& config,
                                double rel_tol = kDefaultStratumTol);

/// Degree-zero field equal to `a` everywhere.
BackgroundField constant_background(const Mat3& a);

CurvatureMatrix eval_background(const BackgroundField& f, const Point4& x);

/// Reducibility targets at p and q.
///
/// M_1(p) is the rank-one solution with n1 >= 0 in reduced coordinates. The
/// labels at q are assigned by proximity to those at p: `q_swapped` says the
/// q-side solution order was exchanged, and `labeling_margin` is the gap
/// between the losing and winning total geodesic distances (the labels are
/// trustworthy while it is large compared to the winning distance).
struct TargetData {
  double s_p = 0.0, s_q = 0.0;
  std::array<Rotation, 2> m_p{}, m_q{};
  std::array<double, 2> residual_p{}, residual_q{};
  bool q_swapped = false;
  double matched_distance = 0.0;
  double labeling_margin = 0.0;
};

/// Throws DegenerateTarget unless both rank-one outcomes are TwoDistinct.
TargetData targets(const BackgroundField& f, const TwoPointConfig& cfg, double rel_tol = kDefaultStratumTol);

void to_json(nlohmann::json& j, const BackgroundField& f);
void from_json(const nlohmann::json& j, BackgroundField& f);

}  // namespace asdglue
