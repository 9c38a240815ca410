#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace asdglue {

/// Header plus rows of a comma-separated file without quoting.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index; throws PreconditionError if absent.
  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

/// Writes lambda_over_L2.svg, count_vs_L.svg and signs.svg into `dir`,
/// using only the contents of results.csv and branches.csv.
void write_plots(const CsvTable& results, const CsvTable& branches, const std::filesystem::path& dir);

/// Reads results.csv and branches.csv from `run_dir` and writes the
/// figures into run_dir/plots.
void plots_from_run_dir(const std::filesystem::path& run_dir);

}  // namespace asdglue
