#include "asdglue/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "asdglue/error.hpp"

namespace asdglue {

namespace fs = std::filesystem;

std::size_t CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw PreconditionError("csv: missing column " + name);
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable read_csv(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot read " + path.string());
  auto split = [](const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
  };
  CsvTable t;
  std::string line;
  if (std::getline(is, line)) t.header = split(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto row = split(line);
    if (row.size() != t.header.size()) throw Error("csv: ragged row in " + path.string());
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

constexpr std::array<const char*, 4> kPairingColors{"#1b6ca8", "#d1495b", "#edae49", "#00798c"};
constexpr std::array<const char*, 4> kPairingNames{"11", "12", "21", "22"};

double to_d(const std::string& s) { return std::stod(s); }

// Plot frame with a logarithmic x axis and a linear or logarithmic y axis.
class Frame {
 public:
  Frame(double x0, double x1, double y0, double y1, bool log_y) : x0_(x0), x1_(x1), y0_(y0), y1_(y1), log_y_(log_y) {
    if (x1_ <= x0_) x1_ = x0_ * 2.0, x0_ = x0_ / 2.0;
    if (y1_ <= y0_) y1_ = y0_ + 1.0;
  }

  double px(double x) const {
    return kLeft + (std::log(x) - std::log(x0_)) / (std::log(x1_) - std::log(x0_)) * (kWidth - kLeft - kRight);
  }
  double py(double y) const {
    const double t = log_y_ ? (std::log(y) - std::log(y0_)) / (std::log(y1_) - std::log(y0_)) : (y - y0_) / (y1_ - y0_);
    return kHeight - kBottom - t * (kHeight - kTop - kBottom);
  }

  std::string open(const std::string& title, const std::string& xlabel, const std::string& ylabel) const {
    std::string s = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n",
        kWidth, kHeight, kWidth, kHeight);
    s += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", kWidth, kHeight);
    s += fmt::format("<text x=\"{}\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n", kWidth / 2, title);
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", kWidth / 2, kHeight - 8, xlabel);
    s += fmt::format("<text x=\"14\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 14 {})\">{}</text>\n",
                     kHeight / 2, kHeight / 2, ylabel);
    s += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n", kLeft,
                     kTop, kWidth - kLeft - kRight, kHeight - kTop - kBottom);
    return s;
  }

  std::string x_ticks(const std::vector<double>& xs) const {
    std::string s;
    for (double x : xs) {
      s += fmt::format("<line x1=\"{:.2f}\" y1=\"{}\" x2=\"{:.2f}\" y2=\"{}\" stroke=\"black\"/>\n", px(x),
                       kHeight - kBottom, px(x), kHeight - kBottom + 5);
      s += fmt::format("<text x=\"{:.2f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", px(x), kHeight - kBottom + 18,
                       fmt::format("{}", x));
    }
    return s;
  }

  std::string y_ticks(const std::vector<double>& ys) const {
    std::string s;
    for (double y : ys) {
      s += fmt::format("<line x1=\"{}\" y1=\"{:.2f}\" x2=\"{}\" y2=\"{:.2f}\" stroke=\"#dddddd\"/>\n", kLeft, py(y),
                       kWidth - kRight, py(y));
      s += fmt::format("<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n", kLeft - 6, py(y) + 4,
                       fmt::format("{:g}", y));
    }
    return s;
  }

  static constexpr int kWidth = 720, kHeight = 480;
  static constexpr int kLeft = 70, kRight = 130, kTop = 36, kBottom = 50;

 private:
  double x0_, x1_, y0_, y1_;
  bool log_y_;
};

std::vector<double> linear_ticks(double lo, double hi) {
  const double span = hi - lo;
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  std::vector<double> out;
  for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step) out.push_back(v);
  return out;
}

std::vector<double> log_ticks(double lo, double hi) {
  std::vector<double> out;
  for (int e = static_cast<int>(std::floor(std::log10(lo))); e <= static_cast<int>(std::ceil(std::log10(hi))); ++e)
    for (double m : {1.0, 2.0, 5.0}) {
      const double v = m * std::pow(10.0, e);
      if (v >= lo * (1 - 1e-12) && v <= hi * (1 + 1e-12)) out.push_back(v);
    }
  return out;
}

std::string legend(const std::vector<std::pair<std::string, std::string>>& entries) {
  std::string s;
  double y = Frame::kTop + 10;
  const double x = Frame::kWidth - Frame::kRight + 12;
  for (const auto& [color, label] : entries) {
    s += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>\n", x, y, x + 20,
                     y, color);
    s += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", x + 26, y + 4, label);
    y += 18;
  }
  return s;
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write " + path.string());
  os << text;
}

std::string polyline(const std::vector<std::pair<double, double>>& pts, const std::string& color, double opacity,
                     const std::string& dash = "") {
  std::string s = "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-opacity=\"" + fmt::format("{:g}", opacity) +
                  "\" stroke-width=\"1.5\"";
  if (!dash.empty()) s += " stroke-dasharray=\"" + dash + "\"";
  s += " points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) s += fmt::format("{}{:.2f},{:.2f}", k ? " " : "", pts[k].first, pts[k].second);
  return s + "\"/>\n";
}

std::string lambda_plot(const CsvTable& b) {
  const std::size_t cs = b.column("seed"), cl = b.column("L"), ca = b.column("alpha"), cp = b.column("pairing"),
                    cb = b.column("branch"), cr = b.column("lambda_over_L2");
  std::vector<double> Ls, rs;
  // (alpha, seed, pairing, branch) -> points in L.
  std::map<std::tuple<std::string, std::string, std::string, std::string>, std::vector<std::pair<double, double>>> series;
  for (const auto& row : b.rows) {
    const double L = to_d(row[cl]), r = to_d(row[cr]);
    Ls.push_back(L);
    rs.push_back(r);
    series[{row[ca], row[cs], row[cp], row[cb]}].push_back({L, r});
  }
  if (Ls.empty()) {
    Ls = {0.1};
    rs = {1.0};
  }
  const auto xs = sorted_unique(Ls);
  const double ylo = *std::min_element(rs.begin(), rs.end()) / 1.2;
  const double yhi = *std::max_element(rs.begin(), rs.end()) * 1.2;
  const Frame fr(xs.front() / 1.15, xs.back() * 1.15, ylo, yhi, true);
  std::string s = fr.open("lambda / L^2 per solution branch", "L", "lambda / L^2");
  s += fr.x_ticks(xs) + fr.y_ticks(log_ticks(ylo, yhi));
  for (auto& [key, pts] : series) {
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<double, double>> px;
    for (const auto& [x, y] : pts) px.push_back({fr.px(x), fr.py(y)});
    const auto k = static_cast<std::size_t>(std::find_if(kPairingNames.begin(), kPairingNames.end(),
                                                         [&](const char* n) { return std::get<2>(key) == n; }) -
                                            kPairingNames.begin());
    const char* color = k < 4 ? kPairingColors[k] : "black";
    s += polyline(px, color, 0.6);
    for (const auto& [x, y] : px) s += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2\" fill=\"{}\"/>\n", x, y, color);
  }
  std::vector<std::pair<std::string, std::string>> entries;
  for (std::size_t k = 0; k < 4; ++k) entries.push_back({kPairingColors[k], fmt::format("pairing ({},{})", kPairingNames[k][0], kPairingNames[k][1])});
  return s + legend(entries) + "</svg>\n";
}

std::string count_plot(const CsvTable& r) {
  const std::size_t cl = r.column("L"), ca = r.column("alpha"), cc = r.column("count");
  std::map<std::string, std::map<double, std::vector<double>>> by_alpha;
  std::vector<double> Ls;
  double cmax = 6.0;
  for (const auto& row : r.rows) {
    const double L = to_d(row[cl]), c = to_d(row[cc]);
    by_alpha[row[ca]][L].push_back(c);
    Ls.push_back(L);
    cmax = std::max(cmax, c);
  }
  if (Ls.empty()) Ls = {0.1};
  const auto xs = sorted_unique(Ls);
  const Frame fr(xs.front() / 1.15, xs.back() * 1.15, 0.0, cmax + 1.0, false);
  std::string s = fr.open("certified admissible solutions per cell", "L", "count (mean, range)");
  s += fr.x_ticks(xs) + fr.y_ticks(linear_ticks(0.0, cmax + 1.0));
  s += polyline({{fr.px(xs.front() / 1.15), fr.py(6.0)}, {fr.px(xs.back() * 1.15), fr.py(6.0)}}, "black", 0.8, "6,4");
  std::vector<std::pair<std::string, std::string>> entries{{"black", "expected 6"}};
  std::size_t k = 0;
  for (const auto& [alpha, cells] : by_alpha) {
    const char* color = kPairingColors[k++ % 4];
    std::vector<std::pair<double, double>> mean;
    for (const auto& [L, cs] : cells) {
      double sum = 0.0;
      for (double c : cs) sum += c;
      const double m = sum / static_cast<double>(cs.size());
      const auto [lo, hi] = std::minmax_element(cs.begin(), cs.end());
      mean.push_back({fr.px(L), fr.py(m)});
      s += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"{3}\"/>\n", fr.px(L),
                       fr.py(*lo), fr.py(*hi), color);
    }
    s += polyline(mean, color, 1.0);
    for (const auto& [x, y] : mean) s += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" fill=\"{}\"/>\n", x, y, color);
    entries.push_back({color, "alpha " + alpha});
  }
  return s + legend(entries) + "</svg>\n";
}

std::string sign_table(const CsvTable& r) {
  const std::size_t cs = r.column("seed"), cl = r.column("L"), ca = r.column("alpha"), cc = r.column("count"),
                    cg = r.column("signs_ok");
  std::vector<std::string> seeds;
  std::vector<std::pair<std::string, std::string>> cols;
  std::map<std::pair<std::string, std::pair<std::string, std::string>>, std::pair<std::string, std::string>> cell;
  for (const auto& row : r.rows) {
    if (std::find(seeds.begin(), seeds.end(), row[cs]) == seeds.end()) seeds.push_back(row[cs]);
    const std::pair<std::string, std::string> col{row[cl], row[ca]};
    if (std::find(cols.begin(), cols.end(), col) == cols.end()) cols.push_back(col);
    cell[{row[cs], col}] = {row[cc], row[cg]};
  }
  constexpr int kCellW = 90, kCellH = 20, kLeftW = 70, kTopH = 50;
  const int width = kLeftW + kCellW * static_cast<int>(cols.size()) + 10;
  const int height = kTopH + kCellH * static_cast<int>(seeds.size()) + 30;
  std::string s = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
      width, height, width, height, width, height);
  s += "<text x=\"10\" y=\"18\" font-size=\"14\">orientation signs and counts (count / all signs +1)</text>\n";
  for (std::size_t c = 0; c < cols.size(); ++c)
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">L={} a={}</text>\n",
                     kLeftW + kCellW * static_cast<int>(c) + kCellW / 2, kTopH - 8, cols[c].first, cols[c].second);
  for (std::size_t k = 0; k < seeds.size(); ++k) {
    const int y = kTopH + kCellH * static_cast<int>(k);
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">seed {}</text>\n", kLeftW - 6, y + 14, seeds[k]);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto it = cell.find({seeds[k], cols[c]});
      if (it == cell.end()) continue;
      const auto& [count, ok] = it->second;
      const bool good = ok == "1" && count == "6";
      const int x = kLeftW + kCellW * static_cast<int>(c);
      s += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" stroke=\"white\"/>\n", x, y,
                       kCellW, kCellH, good ? "#b7e4c7" : (ok == "1" ? "#ffe8a3" : "#f4a3a8"));
      s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{} / {}</text>\n", x + kCellW / 2, y + 14, count,
                       ok == "1" ? "+" : "-");
    }
  }
  return s + "</svg>\n";
}

}  // namespace

void write_plots(const CsvTable& results, const CsvTable& branches, const fs::path& dir) {
  fs::create_directories(dir);
  write_file(dir / "lambda_over_L2.svg", lambda_plot(branches));
  write_file(dir / "count_vs_L.svg", count_plot(results));
  write_file(dir / "signs.svg", sign_table(results));
}

void plots_from_run_dir(const fs::path& run_dir) {
  write_plots(read_csv(run_dir / "results.csv"), read_csv(run_dir / "branches.csv"), run_dir / "plots");
}

}  // namespace asdglue
