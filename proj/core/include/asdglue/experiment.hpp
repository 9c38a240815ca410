#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "asdglue/solver.hpp"

namespace asdglue {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCountAnomaly = 2;
inline constexpr int kExitSignAnomaly = 3;
inline constexpr int kExitOracleDisagreement = 4;

/// Environment variable holding the default output directory.
inline constexpr const char* kOutputDirEnv = "ASDGLUE_OUT";

struct ExperimentSpec {
  std::vector<std::uint64_t> seeds;
  std::vector<double> L_values;  // strictly descending
  std::vector<double> alphas{1.0};
  SolverConfig solver;           // alpha is overridden by each entry of `alphas`
  int degree = 2;
  double amplitude = 1.0;
  std::filesystem::path out_dir = "asdglue_out";
  bool oracle = false;
  std::size_t oracle_starts = 10000;
  bool plots = true;
  bool wall_clock = false;       // write measured wall_ms into results.csv

  /// Throws PreconditionError on an invalid spec.
  void validate() const;
};

struct CellResult {
  std::uint64_t seed = 0;
  double L = 0.0;
  double alpha = 0.0;
  std::array<int, 4> counts{};
  int count = 0;
  bool signs_ok = false;
  double min_lambda_over_L2 = 0.0;
  double max_lambda_over_L2 = 0.0;
  std::optional<bool> oracle_ok;
  double wall_ms = 0.0;
  bool count_anomaly = false;
};

struct ExperimentReport {
  std::vector<CellResult> cells;
  std::vector<std::string> diagnostics;
  int exit_code = kExitOk;
};

/// Runs every (seed, L, alpha) cell and writes into spec.out_dir:
///   results.csv     one row per cell
///   branches.csv    one row per solution
///   timing.csv      measured wall time per cell
///   fields/         background JSON per seed
///   solutions/      solution-set JSON per cell
///   plots/          SVG figures rendered from the two CSV files
///   diagnostics.txt anomalies, or a single "ok" line
/// The field for a seed is shared by all L and alpha values. The exit code
/// is the first of count, sign and oracle anomaly that occurred.
ExperimentReport run(const ExperimentSpec& spec);

/// Columns of results.csv, in order.
const std::vector<std::string>& results_columns();
/// Columns of branches.csv, in order.
const std::vector<std::string>& branches_columns();

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct LemmaSummary {
  std::vector<PropertyCheck> checks;
  bool all_passed() const;
};

/// Closed form against the multi-start oracle on n random Generic matrices,
/// the coalescence families and scalar-rotation inputs.
LemmaSummary lemma_suite(std::size_t n, std::uint64_t seed, std::size_t oracle_starts = 1000);

/// Separation angle of the two rank-one solutions of diag(2 + eps, 2, 1).
double coalescence_separation(double eps);

}  // namespace asdglue
