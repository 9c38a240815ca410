// asdglue: gluing-data enumeration experiments and rank-one checks.

#include <CLI11.hpp>
#include <cstdlib>
#include <fmt/format.h>
#include <iostream>
#include <sstream>

#include "asdglue/error.hpp"
#include "asdglue/experiment.hpp"
#include "asdglue/svg.hpp"

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// "1-20", "3,5,8" or a mix such as "1-4,9".
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const std::string& part : split(text, ',')) {
    const auto dash = part.find('-');
    if (dash == std::string::npos) {
      out.push_back(std::stoull(part));
      continue;
    }
    const std::uint64_t lo = std::stoull(part.substr(0, dash));
    const std::uint64_t hi = std::stoull(part.substr(dash + 1));
    if (hi < lo) throw asdglue::PreconditionError("seed range " + part + " is empty");
    for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
  }
  return out;
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  for (const std::string& part : split(text, ',')) out.push_back(std::stod(part));
  return out;
}

std::string default_out_dir() {
  const char* env = std::getenv(asdglue::kOutputDirEnv);
  return env && *env ? env : "asdglue_out";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate instanton gluing data that make a glued curvature reducible at two points."};
  app.require_subcommand(1);

  std::string seeds = "1-20", Ls = "0.2,0.1,0.05", alphas = "1";
  asdglue::ExperimentSpec spec;
  spec.out_dir = default_out_dir();
  std::string out = spec.out_dir.string();
  bool plots = true;

  auto* run = app.add_subcommand("run", "sweep seeds x L x alpha and write CSV, JSON and SVG outputs");
  run->add_option("--seeds", seeds, "seed list, e.g. 1-20 or 1,4,9")->capture_default_str();
  run->add_option("--L", Ls, "strictly descending comma-separated L values")->capture_default_str();
  run->add_option("--alpha", alphas, "comma-separated cutoff exponents in (0,2)")->capture_default_str();
  run->add_option("--K", spec.solver.K, "cutoff constant in lambda <= K L^alpha")->capture_default_str();
  run->add_option("--degree", spec.degree, "background polynomial degree (0-2)")->capture_default_str();
  run->add_option("--amplitude", spec.amplitude, "background coefficient range")->capture_default_str();
  run->add_flag("--oracle", spec.oracle, "cross-check every cell with the 8-dimensional multi-start oracle");
  run->add_option("--starts", spec.oracle_starts, "oracle starts per cell")->capture_default_str();
  run->add_option("--out", out, fmt::format("output directory (default from {})", asdglue::kOutputDirEnv))
      ->capture_default_str();
  run->add_flag("--plots,!--no-plots", plots, "write SVG plots")->capture_default_str();
  run->add_option("--tol", spec.solver.newton_tol, "certified defect tolerance relative to |F0|")
      ->capture_default_str();
  run->add_option("--grid", spec.solver.grid_density, "Newton starts per axis of the y_I box")->capture_default_str();
  run->add_flag("--wall-clock", spec.wall_clock, "write measured times into results.csv (breaks byte determinism)");

  std::size_t lemma_n = 1000, lemma_starts = 1000;
  std::uint64_t lemma_seed = 1;
  auto* lemma = app.add_subcommand("lemma", "closed-form rank-one completion against the multi-start oracle");
  lemma->add_option("-n,--n", lemma_n, "number of random Generic matrices")->capture_default_str();
  lemma->add_option("--seed", lemma_seed, "RNG seed")->capture_default_str();
  lemma->add_option("--starts", lemma_starts, "oracle starts per matrix")->capture_default_str();

  std::string plot_dir = spec.out_dir.string();
  auto* plot = app.add_subcommand("plot", "re-render the SVG plots of a run directory from its CSV files");
  plot->add_option("--out", plot_dir, "run directory")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      spec.seeds = parse_seeds(seeds);
      spec.L_values = parse_reals(Ls);
      spec.alphas = parse_reals(alphas);
      spec.out_dir = out;
      spec.plots = plots;
      const asdglue::ExperimentReport rep = asdglue::run(spec);
      int good = 0;
      for (const auto& c : rep.cells) good += !c.count_anomaly && c.signs_ok && c.oracle_ok.value_or(true);
      fmt::print("{} cells, {} fully verified, exit {}; outputs in {}\n", rep.cells.size(), good, rep.exit_code,
                 spec.out_dir.string());
      for (const auto& d : rep.diagnostics) fmt::print("  {}\n", d);
      return rep.exit_code;
    }
    if (*lemma) {
      const asdglue::LemmaSummary s = asdglue::lemma_suite(lemma_n, lemma_seed, lemma_starts);
      for (const auto& c : s.checks) fmt::print("{} {}: {}\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
      return s.all_passed() ? 0 : 1;
    }
    if (*plot) {
      asdglue::plots_from_run_dir(plot_dir);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "asdglue: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
