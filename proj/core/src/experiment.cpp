#include "asdglue/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <limits>
#include <nlohmann/json.hpp>
#include <random>

#include "asdglue/error.hpp"
#include "asdglue/svg.hpp"

namespace asdglue {

namespace fs = std::filesystem;

void ExperimentSpec::validate() const {
  if (seeds.empty()) throw PreconditionError("experiment: no seeds");
  if (L_values.empty()) throw PreconditionError("experiment: no L values");
  for (std::size_t k = 0; k < L_values.size(); ++k) {
    if (!(L_values[k] > 0.0) || !std::isfinite(L_values[k])) throw PreconditionError("experiment: L must be positive");
    if (k > 0 && !(L_values[k] < L_values[k - 1])) throw PreconditionError("experiment: L values must be strictly descending");
  }
  if (alphas.empty()) throw PreconditionError("experiment: no alpha values");
  for (double a : alphas) {
    SolverConfig sc = solver;
    sc.alpha = a;
    sc.validate();
  }
  if (degree < 0 || degree > 2) throw PreconditionError("experiment: degree must be 0, 1 or 2");
  if (!(amplitude > 0.0)) throw PreconditionError("experiment: amplitude must be positive");
  if (oracle && oracle_starts == 0) throw PreconditionError("experiment: oracle needs at least one start");
}

const std::vector<std::string>& results_columns() {
  static const std::vector<std::string> cols{"seed", "L", "alpha", "count", "c11", "c12", "c21", "c22", "signs_ok",
                                             "min_lambda_over_L2", "max_lambda_over_L2", "oracle_ok", "wall_ms"};
  return cols;
}

const std::vector<std::string>& branches_columns() {
  static const std::vector<std::string> cols{"seed", "L", "alpha", "pairing", "branch", "lift", "lambda",
                                             "lambda_over_L2", "scale_ratio", "y0", "y1", "y2", "y3", "sign"};
  return cols;
}

namespace {

std::string num(double x) { return fmt::format("{}", x); }

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k];
  return out + "\n";
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write " + path.string());
  os << text;
}

std::string cell_stem(std::uint64_t seed, double L, double alpha) {
  return fmt::format("seed{}_L{}_alpha{}", seed, L, alpha);
}

}  // namespace

ExperimentReport run(const ExperimentSpec& spec) {
  spec.validate();
  fs::create_directories(spec.out_dir / "fields");
  fs::create_directories(spec.out_dir / "solutions");

  std::vector<TwoPointConfig> configs;
  for (double L : spec.L_values) configs.emplace_back(L);

  ExperimentReport report;
  bool any_count = false, any_sign = false, any_oracle = false;
  std::string results = join(results_columns());
  std::string branches = join(branches_columns());
  std::string timing = "seed,L,alpha,wall_ms\n";

  for (std::uint64_t seed : spec.seeds) {
    BackgroundField field;
    try {
      field = make_background(seed, spec.degree, spec.amplitude, configs, spec.solver.stratum_tol);
    } catch (const DegenerateTarget& e) {
      any_count = true;
      report.diagnostics.push_back(fmt::format("seed {}: {}", seed, e.what()));
      continue;
    }
    write_text(spec.out_dir / "fields" / fmt::format("seed{}.json", seed), nlohmann::json(field).dump(2) + "\n");

    for (std::size_t li = 0; li < configs.size(); ++li) {
      const TwoPointConfig& cfg = configs[li];
      for (std::size_t ai = 0; ai < spec.alphas.size(); ++ai) {
        SolverConfig sc = spec.solver;
        sc.alpha = spec.alphas[ai];
        const auto t0 = std::chrono::steady_clock::now();
        const SolutionSet set = enumerate_solutions(field, cfg, sc);

        CellResult cell;
        cell.seed = seed;
        cell.L = cfg.L();
        cell.alpha = sc.alpha;
        cell.counts = set.counts;
        cell.count = static_cast<int>(set.solutions.size());
        cell.signs_ok = !set.sign_anomaly;
        cell.count_anomaly = set.count_anomaly;
        cell.min_lambda_over_L2 = std::numeric_limits<double>::quiet_NaN();
        cell.max_lambda_over_L2 = std::numeric_limits<double>::quiet_NaN();
        if (!set.solutions.empty()) {
          const auto [lo, hi] = std::minmax_element(
              set.solutions.begin(), set.solutions.end(),
              [](const SolutionRecord& a, const SolutionRecord& b) { return a.lambda_over_L2 < b.lambda_over_L2; });
          cell.min_lambda_over_L2 = lo->lambda_over_L2;
          cell.max_lambda_over_L2 = hi->lambda_over_L2;
        }
        const std::string where = fmt::format("seed {} L {} alpha {}", seed, cfg.L(), sc.alpha);
        if (set.count_anomaly || set.sign_anomaly) {
          std::string text = set.report;
          while (!text.empty() && text.back() == '\n') text.pop_back();
          std::size_t pos = 0;
          while (pos <= text.size()) {
            const std::size_t nl = text.find('\n', pos);
            report.diagnostics.push_back(where + ": " + text.substr(pos, nl - pos));
            if (nl == std::string::npos) break;
            pos = nl + 1;
          }
        }
        any_count = any_count || set.count_anomaly;
        any_sign = any_sign || set.sign_anomaly;

        nlohmann::json doc = solution_set_json(field, cfg, sc, set);
        if (spec.oracle) {
          std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                            static_cast<std::uint32_t>(li), static_cast<std::uint32_t>(ai)};
          Rng rng(seq);
          OracleOptions opts;
          opts.n_starts = spec.oracle_starts;
          const OracleResult orc = oracle_enumerate(field, cfg, sc, opts, rng);
          const SetComparison cmp = compare_solution_sets(set.solutions, orc.solutions, cfg.L());
          cell.oracle_ok = cmp.agree;
          any_oracle = any_oracle || !cmp.agree;
          for (const SolutionRecord& r : cmp.only_in_first)
            report.diagnostics.push_back(fmt::format("{}: oracle missed ({},{}) lambda={}", where, r.pairing.i,
                                                     r.pairing.j, r.gluing.lambda));
          for (const SolutionRecord& r : cmp.only_in_second)
            report.diagnostics.push_back(fmt::format("{}: oracle found extra ({},{}) lambda={}", where, r.pairing.i,
                                                     r.pairing.j, r.gluing.lambda));
          doc["oracle"] = {{"n_starts", opts.n_starts},
                           {"converged_starts", orc.converged_starts},
                           {"agree", cmp.agree},
                           {"solutions", orc.solutions},
                           {"rejected", orc.rejected}};
        }
        cell.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        write_text(spec.out_dir / "solutions" / (cell_stem(seed, cfg.L(), sc.alpha) + ".json"), doc.dump(2) + "\n");

        results += join({std::to_string(seed), num(cell.L), num(cell.alpha), std::to_string(cell.count),
                         std::to_string(cell.counts[0]), std::to_string(cell.counts[1]),
                         std::to_string(cell.counts[2]), std::to_string(cell.counts[3]), cell.signs_ok ? "1" : "0",
                         num(cell.min_lambda_over_L2), num(cell.max_lambda_over_L2),
                         cell.oracle_ok ? (*cell.oracle_ok ? "1" : "0") : "na",
                         spec.wall_clock ? fmt::format("{:.3f}", cell.wall_ms) : "0"});
        timing += fmt::format("{},{},{},{:.3f}\n", seed, cell.L, cell.alpha, cell.wall_ms);

        std::array<int, 4> branch_no{};
        for (const SolutionRecord& r : set.solutions) {
          const int b = ++branch_no[pairing_index(r.pairing)];
          const auto& y = r.gluing.y;
          branches += join({std::to_string(seed), num(cell.L), num(cell.alpha),
                            fmt::format("{}{}", r.pairing.i, r.pairing.j), std::to_string(b), std::to_string(r.lift),
                            num(r.gluing.lambda), num(r.lambda_over_L2), num(r.scale_ratio), num(y.x0), num(y.x1),
                            num(y.x2), num(y.x3), std::to_string(r.sign)});
        }
        report.cells.push_back(cell);
      }
    }
  }

  write_text(spec.out_dir / "results.csv", results);
  write_text(spec.out_dir / "branches.csv", branches);
  write_text(spec.out_dir / "timing.csv", timing);
  if (spec.plots) plots_from_run_dir(spec.out_dir);

  report.exit_code = any_count ? kExitCountAnomaly : any_sign ? kExitSignAnomaly : any_oracle ? kExitOracleDisagreement
                                                                                              : kExitOk;
  std::string diag;
  for (const std::string& d : report.diagnostics) diag += d + "\n";
  if (report.diagnostics.empty()) diag = "ok\n";
  write_text(spec.out_dir / "diagnostics.txt", diag);
  return report;
}

bool LemmaSummary::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.passed; });
}

double coalescence_separation(double eps) {
  const LemmaOutcome o = solve_rank_one(Mat3::diag(2.0 + eps, 2.0, 1.0));
  if (o.pairs.size() != 2) throw PreconditionError("coalescence_separation: input left the generic stratum");
  return rotation_distance(o.pairs[0].m, o.pairs[1].m);
}

namespace {

Mat3 random_matrix(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat3 m;
  for (double& x : m.e) x = u(rng);
  return m;
}

bool monotone_family(const std::vector<Mat3>& family, std::string& detail) {
  double prev = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (const Mat3& m : family) {
    const LemmaOutcome o = solve_rank_one(m);
    if (o.pairs.size() != 2) return false;
    const double d = rotation_distance(o.pairs[0].m, o.pairs[1].m);
    detail += fmt::format("{}{:.3e}", detail.empty() ? "separations " : " ", d);
    ok = ok && d < prev;
    prev = d;
  }
  return ok;
}

}  // namespace

LemmaSummary lemma_suite(std::size_t n, std::uint64_t seed, std::size_t oracle_starts) {
  if (n < 1) throw PreconditionError("lemma_suite: n must be >= 1");
  LemmaSummary out;
  Rng rng(seed);

  std::size_t agree = 0, closed_ok = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Mat3 p = random_matrix(rng);
    while (classify_stratum(p).tag != StratumTag::Generic) p = random_matrix(rng);
    const LemmaOutcome cf = solve_rank_one(p);
    const Vec3 sig = svd(p).sigma;
    bool ok = cf.kind == LemmaKind::TwoDistinct && cf.pairs.size() == 2;
    for (const RankOnePair& pr : cf.pairs) {
      const Vec3 s = svd(p + pr.s * pr.m.matrix()).sigma;
      ok = ok && std::abs(pr.s - sig[1]) <= 1e-9 * sig[1] && pr.residual <= 1e-9 * sig[0] &&
           s[0] >= 0.5 * (sig[0] - sig[1]);
    }
    closed_ok += ok;
    try {
      const auto orc = oracle_rank_one(p, oracle_starts, rng);
      bool same = orc.size() == cf.pairs.size();
      for (const RankOnePair& a : orc) {
        const bool hit = std::any_of(cf.pairs.begin(), cf.pairs.end(),
                                     [&](const RankOnePair& b) { return rotation_distance(a.m, b.m) <= 1e-6; });
        same = same && hit;
      }
      agree += same;
    } catch (const OracleInconclusive&) {
    }
  }
  out.checks.push_back({"closed form certified", closed_ok == n, fmt::format("{}/{} matrices", closed_ok, n)});
  out.checks.push_back({"oracle agreement", agree == n, fmt::format("{}/{} matrices", agree, n)});

  std::vector<Mat3> top, bottom;
  for (int k = 1; k <= 6; ++k) {
    const double eps = std::pow(10.0, -k);
    top.push_back(Mat3::diag(2.0 + eps, 2.0, 1.0));
    bottom.push_back(Mat3::diag(3.0, 1.0 + eps, 1.0));
  }
  std::string d1, d2;
  const bool m1 = monotone_family(top, d1);
  const bool m2 = monotone_family(bottom, d2);
  out.checks.push_back({"coalescence sigma1 - sigma2 -> 0", m1, d1});
  out.checks.push_back({"coalescence sigma2 - sigma3 -> 0", m2, d2});

  std::size_t degenerate = 0;
  constexpr std::size_t kScalar = 100;
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (std::size_t k = 0; k < kScalar; ++k) {
    const Mat3 m = scale(rng) * sample_rotation(rng).matrix();
    const LemmaOutcome o = solve_rank_one(m);
    degenerate += o.kind == LemmaKind::Degenerate && o.pairs.empty();
  }
  out.checks.push_back(
      {"scalar rotations degenerate", degenerate == kScalar, fmt::format("{}/{} inputs", degenerate, kScalar)});
  return out;
}

}  // namespace asdglue
