#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "asdglue/linalg3.hpp"
#include "asdglue/rotations.hpp"

namespace testing {

inline asdglue::Mat3 random_matrix(asdglue::Rng& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  asdglue::Mat3 m;
  for (double& x : m.e) x = u(rng);
  return m;
}

inline Eigen::Matrix3d to_eigen(const asdglue::Mat3& m) {
  Eigen::Matrix3d e;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) e(r, c) = m(r, c);
  return e;
}

/// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lx = std::log(x[k]), ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

}  // namespace testing
