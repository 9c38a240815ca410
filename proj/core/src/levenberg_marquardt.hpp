#pragma once

// Small dense Levenberg-Marquardt driver shared by the multi-start searches.
//
// A model supplies
//   Frame frame(const State&)                       chart data held fixed per step
//   bool residual(const State&, const Frame&, R&)   false when undefined
//   State retract(const State&, const X&)           move along a tangent step
//   double merit(const State&)                      frame-free; +inf when undefined
//   bool converged(const State&)
// The Jacobian is a forward difference in the tangent coordinates.

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace asdglue::detail {

struct LmSettings {
  int max_iters = 100;
  double fd_step = 1e-7;
  double mu0 = 1e-3;
  int max_rejections = 12;
};

template <class State>
struct LmResult {
  State x;
  bool converged = false;
  int iterations = 0;
};

template <int NX, int NR, class State, class Model>
LmResult<State> levenberg_marquardt(State x, Model& model, const LmSettings& settings = {}) {
  using X = Eigen::Matrix<double, NX, 1>;
  using R = Eigen::Matrix<double, NR, 1>;
  using J = Eigen::Matrix<double, NR, NX>;
  using A = Eigen::Matrix<double, NX, NX>;

  LmResult<State> out{x, false, 0};
  double mu = settings.mu0;
  double m0 = model.merit(x);
  if (!std::isfinite(m0)) return out;

  for (int it = 0; it < settings.max_iters; ++it) {
    out.iterations = it;
    if (model.converged(x)) {
      out.x = x;
      out.converged = true;
      return out;
    }
    const auto frame = model.frame(x);
    R r0;
    if (!model.residual(x, frame, r0)) break;

    J jac;
    bool ok = true;
    for (int k = 0; k < NX && ok; ++k) {
      X step = X::Zero();
      step(k) = settings.fd_step;
      R rk;
      if (model.residual(model.retract(x, step), frame, rk)) {
        jac.col(k) = (rk - r0) / settings.fd_step;
      } else if (model.residual(model.retract(x, -step), frame, rk)) {
        jac.col(k) = (r0 - rk) / settings.fd_step;
      } else {
        ok = false;
      }
    }
    if (!ok) break;

    const A jtj = jac.transpose() * jac;
    const X grad = jac.transpose() * r0;
    bool accepted = false;
    X delta = X::Zero();
    for (int tries = 0; tries < settings.max_rejections; ++tries) {
      A damped = jtj;
      for (int k = 0; k < NX; ++k) damped(k, k) += mu * jtj(k, k) + mu * 1e-12;
      delta = damped.partialPivLu().solve(-grad);
      if (!delta.allFinite()) {
        mu *= 4.0;
        continue;
      }
      State trial = model.retract(x, delta);
      const double mt = model.merit(trial);
      if (std::isfinite(mt) && mt < m0) {
        x = trial;
        m0 = mt;
        mu = std::max(mu / 3.0, 1e-12);
        accepted = true;
        break;
      }
      mu *= 4.0;
    }
    if (!accepted) break;
  }
  out.x = x;
  out.converged = model.converged(x);
  return out;
}

}  // namespace asdglue::detail
