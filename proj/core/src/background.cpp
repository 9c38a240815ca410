#include "asdglue/background.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "asdglue/error.hpp"

namespace asdglue {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Portable uniform draw in [-a, a] from the top 53 bits.
double uniform_sym(Rng& rng, double a) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return a * (2.0 * u - 1.0);
}

Mat3 random_mat(Rng& rng, double a) {
  Mat3 m;
  for (double& x : m.e) x = uniform_sym(rng, a);
  return m;
}

double coord(const Point4& x, std::size_t a) {
  switch (a) {
    case 0: return x.x0;
    case 1: return x.x1;
    case 2: return x.x2;
    default: return x.x3;
  }
}

bool generic_at(const BackgroundField& f, const TwoPointConfig& c, double rel_tol) {
  return classify_stratum(eval_background(f, c.p()), rel_tol).tag == StratumTag::Generic &&
         classify_stratum(eval_background(f, c.q()), rel_tol).tag == StratumTag::Generic;
}

}  // namespace

std::size_t quadratic_index(std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  // Rows of the upper triangle have lengths 4, 3, 2, 1.
  static constexpr std::array<std::size_t, 4> kRowStart{0, 4, 7, 9};
  return kRowStart[a] + (b - a);
}

BackgroundField make_background(std::uint64_t seed, int degree, double amplitude,
                                std::span<const TwoPointConfig> configs, double rel_tol) {
  if (degree < 0 || degree > 2) throw PreconditionError("make_background: degree must be 0, 1 or 2");
  if (!std::isfinite(amplitude) || !(amplitude > 0.0)) throw PreconditionError("make_background: amplitude must be > 0");

  for (int attempt = 0; attempt < kMaxBackgroundRetries; ++attempt) {
    Rng rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(attempt))));
    BackgroundField f;
    f.degree = degree;
    f.seed = seed;
    f.attempt = attempt;
    f.amplitude = amplitude;
    f.constant = random_mat(rng, amplitude);
    if (degree >= 1)
      for (Mat3& b : f.linear) b = random_mat(rng, amplitude);
    if (degree >= 2)
      for (Mat3& c : f.quadratic) c = random_mat(rng, amplitude);

    bool ok = true;
    for (const TwoPointConfig& c : configs) ok = ok && generic_at(f, c, rel_tol);
    if (ok) return f;
  }
  throw DegenerateTarget("make_background: no generic field after retries");
}

BackgroundField make_background(std::uint64_t seed, int degree, double amplitude, const TwoPointConfig& config,
                                double rel_tol) {
  return make_background(seed, degree, amplitude, std::span<const TwoPointConfig>(&config, 1), rel_tol);
}

BackgroundField constant_background(const Mat3& a) {
  BackgroundField f;
  f.degree = 0;
  f.constant = a;
  f.amplitude = a.max_abs();
  return f;
}

CurvatureMatrix eval_background(const BackgroundField& f, const Point4& x) {
  Mat3 out = f.constant;
  if (f.degree < 1) return out;
  for (std::size_t a = 0; a < 4; ++a) {
    Mat3 inner = f.linear[a];
    if (f.degree >= 2)
      for (std::size_t b = a; b < 4; ++b) inner += coord(x, b) * f.quadratic[quadratic_index(a, b)];
    out += coord(x, a) * inner;
  }
  return out;
}

TargetData targets(const BackgroundField& f, const TwoPointConfig& cfg, double rel_tol) {
  const LemmaOutcome lp = solve_rank_one(eval_background(f, cfg.p()), rel_tol);
  const LemmaOutcome lq = solve_rank_one(eval_background(f, cfg.q()), rel_tol);
  if (lp.kind != LemmaKind::TwoDistinct || lq.kind != LemmaKind::TwoDistinct)
    throw DegenerateTarget("targets: background is not generic at p or q");

  TargetData t;
  t.s_p = lp.pairs[0].s;
  t.s_q = lq.pairs[0].s;
  t.m_p = {lp.pairs[0].m, lp.pairs[1].m};
  t.residual_p = {lp.pairs[0].residual, lp.pairs[1].residual};

  const double straight =
      rotation_distance(lp.pairs[0].m, lq.pairs[0].m) + rotation_distance(lp.pairs[1].m, lq.pairs[1].m);
  const double crossed =
      rotation_distance(lp.pairs[0].m, lq.pairs[1].m) + rotation_distance(lp.pairs[1].m, lq.pairs[0].m);
  t.q_swapped = crossed < straight;
  const std::size_t first = t.q_swapped ? 1 : 0;
  t.m_q = {lq.pairs[first].m, lq.pairs[1 - first].m};
  t.residual_q = {lq.pairs[first].residual, lq.pairs[1 - first].residual};
  t.matched_distance = std::min(straight, crossed);
  t.labeling_margin = std::abs(crossed - straight);
  return t;
}

namespace {

nlohmann::json mat_json(const Mat3& m) { return m.e; }
Mat3 mat_from(const nlohmann::json& j) { return Mat3{j.get<std::array<double, 9>>()}; }

}  // namespace

void to_json(nlohmann::json& j, const BackgroundField& f) {
  j = nlohmann::json{{"degree", f.degree}, {"seed", f.seed}, {"attempt", f.attempt}, {"amplitude", f.amplitude}};
  j["constant"] = mat_json(f.constant);
  if (f.degree >= 1) {
    auto& lin = j["linear"] = nlohmann::json::array();
    for (const Mat3& m : f.linear) lin.push_back(mat_json(m));
  }
  if (f.degree >= 2) {
    auto& quad = j["quadratic"] = nlohmann::json::array();
    for (const Mat3& m : f.quadratic) quad.push_back(mat_json(m));
  }
}

void from_json(const nlohmann::json& j, BackgroundField& f) {
  f = BackgroundField{};
  f.degree = j.at("degree").get<int>();
  f.seed = j.at("seed").get<std::uint64_t>();
  f.attempt = j.at("attempt").get<int>();
  f.amplitude = j.at("amplitude").get<double>();
  f.constant = mat_from(j.at("constant"));
  if (f.degree < 0 || f.degree > 2) throw PreconditionError("background json: bad degree");
  if (f.degree >= 1) {
    const auto& lin = j.at("linear");
    if (lin.size() != 4) throw PreconditionError("background json: expected 4 linear coefficients");
    for (std::size_t a = 0; a < 4; ++a) f.linear[a] = mat_from(lin[a]);
  }
  if (f.degree >= 2) {
    const auto& quad = j.at("quadratic");
    if (quad.size() != 10) throw PreconditionError("background json: expected 10 quadratic coefficients");
    for (std::size_t k = 0; k < 10; ++k) f.quadratic[k] = mat_from(quad[k]);
  }
}

}  // namespace asdglue
