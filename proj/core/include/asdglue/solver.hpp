#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "asdglue/background.hpp"
#include "asdglue/instanton.hpp"

namespace asdglue {

struct SolverConfig {
  double K = 1.0;
  double alpha = 1.0;          // cutoff lambda <= K L^alpha, alpha in (0, 2)
  double newton_tol = 1e-12;   // certified defect relative to the background scale
  int max_newton_iters = 50;
  int grid_density = 16;       // starts per axis of the y_I box
  double dedupe_radius = 1e-6; // in the metric of solution_distance
  double stratum_tol = kDefaultStratumTol;

  /// Throws PreconditionError on out-of-range fields.
  void validate() const;
  double lambda_cutoff(double L) const;
};

struct GluingData {
  Point4 y;
  double lambda = 0.0;
  Rotation m;
};

/// Target labels (i, j): M_i at p and M_j at q. One-based.
struct Pairing {
  int i = 1, j = 1;
  friend bool operator==(const Pairing&, const Pairing&) = default;
};

/// Index of a pairing in (1,1) (1,2) (2,1) (2,2) order.
std::size_t pairing_index(const Pairing& p);
Pairing pairing_at(std::size_t index);

struct SolutionRecord {
  GluingData gluing;
  Pairing pairing;
  int lift = 0;              // 0: g(y) = +h, 1: g(y) = -h, with h the canonical lift of the target
  double defect_norm = 0.0;  // sqrt of sigma2^2 + sigma3^2 summed over p and q
  double residual_p = 0.0;   // sigma2 of the glued curvature at p
  double residual_q = 0.0;
  int sign = 0;              // orientation; 0 when not computed
  double det_ratio = 0.0;    // |det J| / product of row norms
  double lambda_over_L2 = 0.0;
  double scale_ratio = 0.0;  // lambda / ((L^2 + |y_I|^2) sqrt(s_p))
  bool small_branch = true;
  bool admissible = true;
};

/// Root of the two magnitude conditions at fixed y_I.
struct MagnitudeRoot {
  double y0 = 0.0;
  double lambda = 0.0;
  bool small_branch = true;  // false for the large root and for a double root
  double residual = 0.0;     // max abs error in the two magnitude equations
};

/// Solves lambda^2 + |y - p|^2 = lambda / sqrt(s_p) and the q analogue with
/// y = (y0, y_I). The difference fixes y0 = beta lambda with
/// beta = (1/sqrt(s_q) - 1/sqrt(s_p)) / (4L), leaving
///   (1 + beta^2) lambda^2 - b lambda + L^2 + |y_I|^2 = 0,
///   b = (1/sqrt(s_p) + 1/sqrt(s_q)) / 2.
/// Returns the small root first. A discriminant within 1e-9 b^2 of zero is
/// reported as one double root.
std::vector<MagnitudeRoot> solve_magnitude(const TwoPointConfig& cfg, double s_p, double s_q, const Vec3& y_im);

/// Largest |y_I| for which the small magnitude root is at most lambda_max.
double admissible_radius(const TwoPointConfig& cfg, double s_p, double s_q, double lambda_max);

/// F0 + F_std at p and q.
std::pair<CurvatureMatrix, CurvatureMatrix> glued_curvatures(const BackgroundField& f, const TwoPointConfig& cfg,
                                                             const GluingData& g);

/// max(|dy| / L, |d log lambda|, geodesic angle between gluing angles).
double solution_distance(const GluingData& a, const GluingData& b, double L);

struct SolutionSet {
  std::vector<SolutionRecord> solutions;  // certified, admissible
  std::vector<SolutionRecord> rejected;   // certified, but large branch or above the cutoff
  std::array<int, 4> counts{};            // per pairing, (1,1) (1,2) (2,1) (2,2)
  bool count_anomaly = false;
  bool sign_anomaly = false;
  std::string report;
};

inline constexpr std::array<int, 4> kExpectedCounts{1, 2, 2, 1};

/// All certified admissible gluing data for the four target pairings, by
/// Newton iteration in y_I on Im(conj(h) g(y)) = 0 from the closed-form
/// starting points and a grid over the admissible box. Each record carries
/// its orientation sign. Count and sign anomalies are reported, never
/// suppressed.
SolutionSet enumerate_solutions(const BackgroundField& f, const TwoPointConfig& cfg, const SolverConfig& sc = {});

struct Orientation {
  int sign = 0;
  double det = 0.0;
  double det_ratio = 0.0;
};

inline constexpr double kOrientationStep = 1e-5;
inline constexpr double kNearDegenerateRatio = 1e-6;

/// Central-difference Jacobian of the defect map
///   (y, log lambda, omega) -> (chart at p, chart at q),  m = m* exp(omega),
/// with y stepped by h L and the charts frozen at the solution. The sign
/// includes the global convention that makes the reference configuration
/// positive. Throws NearDegenerate when det_ratio < kNearDegenerateRatio.
Orientation orientation(const BackgroundField& f, const TwoPointConfig& cfg, const GluingData& g,
                        double h = kOrientationStep);
int orientation_sign(const BackgroundField& f, const TwoPointConfig& cfg, const SolutionRecord& rec,
                     double h = kOrientationStep);

/// Sign of det J that is reported as +1.
inline constexpr int kOrientationConvention = 1;

/// Constant background e1 z^T - I with z = (cos 1, sin 1, 0): sigma2 = 1 and
/// the identity is one of its rank-one solutions, so y = 0, m = I with the
/// small root of lambda^2 - lambda + L^2 = 0 is a solution for the pairing
/// whose labels select the identity.
struct ReferenceConfiguration {
  BackgroundField field;
  TwoPointConfig cfg;
  GluingData gluing;
  Pairing pairing;
};
ReferenceConfiguration reference_configuration(double L);

struct OracleOptions {
  std::size_t n_starts = 10000;
  std::optional<double> lambda_min;  // defaults to L^3
  std::optional<double> lambda_max;  // defaults to the cutoff K L^alpha
  int max_iters = 200;
};

struct OracleResult {
  std::vector<SolutionRecord> solutions;  // certified, admissible, deduped
  std::vector<SolutionRecord> rejected;   // certified but inadmissible
  std::size_t converged_starts = 0;
};

/// Multi-start Levenberg-Marquardt on the full 8-dimensional defect map.
OracleResult oracle_enumerate(const BackgroundField& f, const TwoPointConfig& cfg, const SolverConfig& sc,
                              const OracleOptions& opts, Rng& rng);

struct SetComparison {
  bool agree = true;
  std::vector<SolutionRecord> only_in_first;
  std::vector<SolutionRecord> only_in_second;
};

/// Matches records with equal pairing and solution_distance <= tol.
SetComparison compare_solution_sets(const std::vector<SolutionRecord>& a, const std::vector<SolutionRecord>& b,
                                    double L, double tol = 1e-6);

void to_json(nlohmann::json& j, const SolverConfig& c);
void to_json(nlohmann::json& j, const SolutionRecord& r);
/// Document with config, field seed, convention metadata and records.
nlohmann::json solution_set_json(const BackgroundField& f, const TwoPointConfig& cfg, const SolverConfig& sc,
                                 const SolutionSet& set);

}  // namespace asdglue
