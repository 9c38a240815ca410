#include "asdglue/solver.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <numbers>
#include <tuple>

#include "asdglue/defect_chart.hpp"
#include "asdglue/error.hpp"
#include "levenberg_marquardt.hpp"

namespace asdglue {

void SolverConfig::validate() const {
  if (!std::isfinite(K) || !(K > 0.0)) throw PreconditionError("SolverConfig: K must be positive");
  if (!(alpha > 0.0 && alpha < 2.0)) throw PreconditionError("SolverConfig: alpha must lie in (0, 2)");
  if (!(newton_tol > 0.0)) throw PreconditionError("SolverConfig: newton_tol must be positive");
  if (max_newton_iters < 1) throw PreconditionError("SolverConfig: max_newton_iters must be >= 1");
  if (grid_density < 0) throw PreconditionError("SolverConfig: grid_density must be >= 0");
  if (!(dedupe_radius > 0.0)) throw PreconditionError("SolverConfig: dedupe_radius must be positive");
  if (!(stratum_tol > 0.0 && stratum_tol < 0.5)) throw PreconditionError("SolverConfig: stratum_tol out of range");
}

double SolverConfig::lambda_cutoff(double L) const { return K * std::pow(L, alpha); }

std::size_t pairing_index(const Pairing& p) { return static_cast<std::size_t>((p.i - 1) * 2 + (p.j - 1)); }
Pairing pairing_at(std::size_t index) { return {static_cast<int>(index / 2) + 1, static_cast<int>(index % 2) + 1}; }

namespace {

struct Quadratic {
  double beta, b, a2;
};

Quadratic magnitude_quadratic(const TwoPointConfig& cfg, double s_p, double s_q) {
  if (!(s_p > 0.0) || !(s_q > 0.0)) throw PreconditionError("solve_magnitude: s_p and s_q must be positive");
  const double ap = 1.0 / std::sqrt(s_p);
  const double aq = 1.0 / std::sqrt(s_q);
  const double beta = (aq - ap) / (4.0 * cfg.L());
  return {beta, 0.5 * (ap + aq), 1.0 + beta * beta};
}

// Upper end of the small branch.
double branch_point(const TwoPointConfig& cfg, double s_p, double s_q) {
  const Quadratic qd = magnitude_quadratic(cfg, s_p, s_q);
  return qd.b / (2.0 * qd.a2);
}

}  // namespace

std::vector<MagnitudeRoot> solve_magnitude(const TwoPointConfig& cfg, double s_p, double s_q, const Vec3& y_im) {
  const auto [beta, b, a2] = magnitude_quadratic(cfg, s_p, s_q);
  const double L = cfg.L();
  const double r2 = dot(y_im, y_im);
  const double c = L * L + r2;
  const double disc = b * b - 4.0 * a2 * c;
  const double ap = 1.0 / std::sqrt(s_p);
  const double aq = 1.0 / std::sqrt(s_q);

  auto make = [&](double lam, bool small) {
    const double y0 = beta * lam;
    const double ep = lam * lam + (y0 - L) * (y0 - L) + r2 - lam * ap;
    const double eq = lam * lam + (y0 + L) * (y0 + L) + r2 - lam * aq;
    return MagnitudeRoot{y0, lam, small, std::max(std::abs(ep), std::abs(eq))};
  };

  const double rel = disc / (b * b);
  if (std::abs(rel) <= 1e-9) return {make(b / (2.0 * a2), false)};
  if (rel < 0.0) return {};
  const double sq = std::sqrt(disc);
  return {make(2.0 * c / (b + sq), true), make((b + sq) / (2.0 * a2), false)};
}

double admissible_radius(const TwoPointConfig& cfg, double s_p, double s_q, double lambda_max) {
  const auto [beta, b, a2] = magnitude_quadratic(cfg, s_p, s_q);
  const double lam = std::min(lambda_max, b / (2.0 * a2));
  const double r2 = b * lam - a2 * lam * lam - cfg.L() * cfg.L();
  return r2 > 0.0 ? std::sqrt(r2) : 0.0;
}

std::pair<CurvatureMatrix, CurvatureMatrix> glued_curvatures(const BackgroundField& f, const TwoPointConfig& cfg,
                                                             const GluingData& g) {
  const StdInstanton inst{g.y, g.lambda, g.m};
  return {eval_background(f, cfg.p()) + f_std(inst, cfg.p()), eval_background(f, cfg.q()) + f_std(inst, cfg.q())};
}

double solution_distance(const GluingData& a, const GluingData& b, double L) {
  const double dy = (a.y - b.y).norm() / L;
  const double dl = std::abs(std::log(a.lambda / b.lambda));
  return std::max({dy, dl, rotation_distance(a.m, b.m)});
}

namespace {

Quaternion target_lift(const TargetData& t, const Pairing& pr) {
  const Rotation target = t.m_p[static_cast<std::size_t>(pr.i - 1)].inverse() * t.m_q[static_cast<std::size_t>(pr.j - 1)];
  return rho_inverse_pair(target).first.value();
}

struct Context {
  const BackgroundField& f;
  const TwoPointConfig& cfg;
  const SolverConfig& sc;
  TargetData t;
  Mat3 f0p, f0q;
  double scale;      // max sigma1 of the background at p and q
  double cutoff;
  double branch;

  Context(const BackgroundField& field, const TwoPointConfig& c, const SolverConfig& s)
      : f(field), cfg(c), sc(s), t(targets(field, c, s.stratum_tol)) {
    f0p = eval_background(f, cfg.p());
    f0q = eval_background(f, cfg.q());
    scale = std::max(svd(f0p).sigma[0], svd(f0q).sigma[0]);
    cutoff = sc.lambda_cutoff(cfg.L());
    branch = branch_point(cfg, t.s_p, t.s_q);
  }
};

// Gluing angle that puts the bubble on target M_i(p) at p.
Rotation gluing_angle(const Context& ctx, const Point4& y, int i) {
  const UnitQuaternion up = UnitQuaternion::normalize((ctx.cfg.p() - y).as_quaternion());
  return rho(up) * ctx.t.m_p[static_cast<std::size_t>(i - 1)].inverse();
}

// Full record with certification data. Returns nullopt if not certified.
std::optional<SolutionRecord> make_record(const Context& ctx, const GluingData& g, const Pairing& pr) {
  SolutionRecord r;
  r.gluing = g;
  r.pairing = pr;
  try {
    const auto [fp, fq] = glued_curvatures(ctx.f, ctx.cfg, g);
    const SvdTriple sp = svd(fp), sq = svd(fq);
    r.residual_p = sp.sigma[1];
    r.residual_q = sq.sigma[1];
    r.defect_norm = std::sqrt(rank_one_defect_sq(sp) + rank_one_defect_sq(sq));
    const Quaternion hq = target_lift(ctx.t, pr);
    const Quaternion gq = g_map(ctx.cfg, g.y).value();
    r.lift = dot(hq, gq) >= 0.0 ? 0 : 1;
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!(r.defect_norm <= ctx.sc.newton_tol * ctx.scale)) return std::nullopt;
  const double L = ctx.cfg.L();
  const Vec3 yi = g.y.imaginary();
  r.lambda_over_L2 = g.lambda / (L * L);
  r.scale_ratio = g.lambda / ((L * L + dot(yi, yi)) * std::sqrt(ctx.t.s_p));
  r.small_branch = g.lambda < ctx.branch;
  r.admissible = r.small_branch && g.lambda <= ctx.cutoff;
  return r;
}

void insert_unique(std::vector<SolutionRecord>& out, const SolutionRecord& r, double L, double radius) {
  for (SolutionRecord& q : out) {
    if (q.pairing == r.pairing && solution_distance(q.gluing, r.gluing, L) <= radius) {
      if (r.defect_norm < q.defect_norm) q = r;
      return;
    }
  }
  out.push_back(r);
}

bool record_less(const SolutionRecord& a, const SolutionRecord& b) {
  const auto ka = pairing_index(a.pairing), kb = pairing_index(b.pairing);
  if (ka != kb) return ka < kb;
  if (a.gluing.lambda != b.gluing.lambda) return a.gluing.lambda < b.gluing.lambda;
  const auto& ya = a.gluing.y;
  const auto& yb = b.gluing.y;
  return std::tie(ya.x0, ya.x1, ya.x2, ya.x3) < std::tie(yb.x0, yb.x1, yb.x2, yb.x3);
}

// Unknown eta = y_I / L; residual Im(conj(h) g(y)) with y0, lambda taken
// from the small magnitude root.
struct AngleModel {
  const Context& ctx;
  Quaternion hbar;

  struct Frame {};
  Frame frame(const Vec3&) const { return {}; }

  std::optional<std::pair<Point4, double>> point(const Vec3& eta) const {
    const double L = ctx.cfg.L();
    const Vec3 yi = L * eta;
    const auto roots = solve_magnitude(ctx.cfg, ctx.t.s_p, ctx.t.s_q, yi);
    if (roots.empty()) return std::nullopt;
    return std::pair{Point4::from_parts(roots[0].y0, yi), roots[0].lambda};
  }

  bool residual(const Vec3& eta, const Frame&, Eigen::Vector3d& out) const {
    const auto pt = point(eta);
    if (!pt) return false;
    try {
      const Quaternion z = hbar * g_map(ctx.cfg, pt->first).value();
      out << z.x, z.y, z.z;
    } catch (const Error&) {
      return false;
    }
    return out.allFinite();
  }
  Vec3 retract(const Vec3& eta, const Eigen::Vector3d& d) const { return {eta[0] + d(0), eta[1] + d(1), eta[2] + d(2)}; }
  double merit(const Vec3& eta) const {
    Eigen::Vector3d r;
    return residual(eta, {}, r) ? r.squaredNorm() : std::numeric_limits<double>::infinity();
  }
  bool converged(const Vec3& eta) const { return merit(eta) <= 1e-30; }
};

// Starting points in eta where g = +-h exactly on the plane y0 = 0, where
// g(y_I) = -w^2 with w = (L + y_I) / |L + y_I|.
std::vector<Vec3> closed_form_starts(const Quaternion& h) {
  std::vector<Vec3> out;
  for (double sgn : {1.0, -1.0}) {
    const Quaternion w = Quaternion::real(1.0) - sgn * h;  // w^2 proportional to -sgn h
    if (w.norm() < 1e-12 || w.w <= 0.0) continue;
    out.push_back((1.0 / w.w) * w.imaginary());
  }
  return out;
}

}  // namespace

Orientation orientation(const BackgroundField& f, const TwoPointConfig& cfg, const GluingData& g, double h) {
  const double L = cfg.L();
  const Mat3 f0p = eval_background(f, cfg.p());
  const Mat3 f0q = eval_background(f, cfg.q());
  const auto [fp, fq] = glued_curvatures(f, cfg, g);
  const DefectChart cp = DefectChart::at(fp);
  const DefectChart cq = DefectChart::at(fq);

  using Vec8 = Eigen::Matrix<double, 8, 1>;
  auto phi = [&](const Vec8& x) {
    const Point4 y = g.y + L * Point4{x(0), x(1), x(2), x(3)};
    const StdInstanton inst{y, g.lambda * std::exp(x(4)), g.m * exp_so3({x(5), x(6), x(7)})};
    const auto a = cp(f0p + f_std(inst, cfg.p()));
    const auto b = cq(f0q + f_std(inst, cfg.q()));
    Vec8 out;
    out << a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3];
    return out;
  };

  Eigen::Matrix<double, 8, 8> jac;
  for (int k = 0; k < 8; ++k) {
    Vec8 e = Vec8::Zero();
    e(k) = h;
    jac.col(k) = (phi(e) - phi(-e)) / (2.0 * h);
  }
  Orientation o;
  o.det = jac.partialPivLu().determinant();
  double rows = 1.0;
  for (int r = 0; r < 8; ++r) rows *= jac.row(r).norm();
  o.det_ratio = rows > 0.0 ? std::abs(o.det) / rows : 0.0;
  if (!(o.det_ratio >= kNearDegenerateRatio))
    throw NearDegenerate(fmt::format("orientation: |det| / prod(row norms) = {:.3e}", o.det_ratio));
  o.sign = kOrientationConvention * (o.det > 0.0 ? 1 : -1);
  return o;
}

int orientation_sign(const BackgroundField& f, const TwoPointConfig& cfg, const SolutionRecord& rec, double h) {
  return orientation(f, cfg, rec.gluing, h).sign;
}

namespace {

void attach_signs(const BackgroundField& f, const TwoPointConfig& cfg, std::vector<SolutionRecord>& recs) {
  for (SolutionRecord& r : recs) {
    try {
      const Orientation o = orientation(f, cfg, r.gluing);
      r.sign = o.sign;
      r.det_ratio = o.det_ratio;
    } catch (const NearDegenerate&) {
      r.sign = 0;
    }
  }
}

}  // namespace

SolutionSet enumerate_solutions(const BackgroundField& f, const TwoPointConfig& cfg, const SolverConfig& sc) {
  sc.validate();
  const Context ctx(f, cfg, sc);
  const double L = cfg.L();
  detail::LmSettings lm;
  lm.max_iters = sc.max_newton_iters;

  // The grid covers the admissible ball with some margin; roots found
  // outside the cutoff are kept as rejected.
  const double radius = 1.25 * admissible_radius(cfg, ctx.t.s_p, ctx.t.s_q, ctx.cutoff) / L;
  std::vector<Vec3> grid;
  const int n = sc.grid_density;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto at = [&](int k) { return radius * (-1.0 + (2.0 * k + 1.0) / n); };
        grid.push_back({at(a), at(b), at(c)});
      }

  std::vector<SolutionRecord> found;
  for (std::size_t k = 0; k < 4; ++k) {
    const Pairing pr = pairing_at(k);
    const Quaternion h = target_lift(ctx.t, pr);
    const AngleModel model{ctx, h.conj()};
    std::vector<Vec3> starts = closed_form_starts(h);
    starts.insert(starts.end(), grid.begin(), grid.end());

    for (const Vec3& s0 : starts) {
      if (!std::isfinite(model.merit(s0))) continue;
      const auto res = detail::levenberg_marquardt<3, 3>(s0, model, lm);
      if (!(model.merit(res.x) <= 1e-20)) continue;
      const auto pt = model.point(res.x);
      if (!pt) continue;
      const GluingData g{pt->first, pt->second, gluing_angle(ctx, pt->first, pr.i)};
      if (auto rec = make_record(ctx, g, pr)) insert_unique(found, *rec, L, sc.dedupe_radius);
    }
  }

  SolutionSet out;
  for (const SolutionRecord& r : found) (r.admissible ? out.solutions : out.rejected).push_back(r);
  std::sort(out.solutions.begin(), out.solutions.end(), record_less);
  std::sort(out.rejected.begin(), out.rejected.end(), record_less);
  attach_signs(f, cfg, out.solutions);

  for (const SolutionRecord& r : out.solutions) ++out.counts[pairing_index(r.pairing)];
  out.count_anomaly = out.counts != kExpectedCounts;
  if (out.count_anomaly) {
    out.report += fmt::format("count anomaly: L={} counts (1,1)={} (1,2)={} (2,1)={} (2,2)={}, expected 1/2/2/1\n", L,
                              out.counts[0], out.counts[1], out.counts[2], out.counts[3]);
  }
  for (const SolutionRecord& r : out.solutions) {
    if (r.sign != 1) {
      out.sign_anomaly = true;
      out.report += fmt::format("sign anomaly: L={} pairing ({},{}) lambda={:.6e} sign={} det_ratio={:.3e}\n", L,
                                r.pairing.i, r.pairing.j, r.gluing.lambda, r.sign, r.det_ratio);
    }
  }
  return out;
}

ReferenceConfiguration reference_configuration(double L) {
  const Vec3 z{std::cos(1.0), std::sin(1.0), 0.0};
  const Mat3 pmat = Mat3::outer({1.0, 0.0, 0.0}, z) - Mat3::identity();
  ReferenceConfiguration ref{constant_background(pmat), TwoPointConfig(L), {}, {}};
  const double s = sigma2(pmat);
  const auto roots = solve_magnitude(ref.cfg, s, s, {0.0, 0.0, 0.0});
  if (roots.empty() || !roots[0].small_branch)
    throw PreconditionError("reference_configuration: L too large for a small magnitude root");
  ref.gluing = {Point4{}, roots[0].lambda, Rotation::identity()};
  const TargetData t = targets(ref.field, ref.cfg);
  auto closest = [](const std::array<Rotation, 2>& ms) {
    return rotation_distance(ms[0], Rotation::identity()) <= rotation_distance(ms[1], Rotation::identity()) ? 1 : 2;
  };
  ref.pairing = {closest(t.m_p), closest(t.m_q)};
  return ref;
}

namespace {

struct OracleState {
  Point4 y;
  double t = 0.0;  // log lambda
  Rotation m;
};

struct OracleModel {
  const Context& ctx;

  using Frame = std::pair<DefectChart, DefectChart>;

  GluingData gluing(const OracleState& s) const { return {s.y, std::exp(s.t), s.m}; }

  std::optional<std::pair<Mat3, Mat3>> glued(const OracleState& s) const {
    try {
      const StdInstanton inst{s.y, std::exp(s.t), s.m};
      return std::pair{ctx.f0p + f_std(inst, ctx.cfg.p()), ctx.f0q + f_std(inst, ctx.cfg.q())};
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  Frame frame(const OracleState& s) const {
    const auto fq = glued(s);
    return {DefectChart::at(fq->first), DefectChart::at(fq->second)};
  }
  bool residual(const OracleState& s, const Frame& fr, Eigen::Matrix<double, 8, 1>& out) const {
    const auto fq = glued(s);
    if (!fq) return false;
    const auto a = fr.first(fq->first);
    const auto b = fr.second(fq->second);
    out << a[0], a[1], a[2], a[3], b[0], b[1], b[2], b[3];
    return out.allFinite();
  }
  OracleState retract(const OracleState& s, const Eigen::Matrix<double, 8, 1>& d) const {
    const double L = ctx.cfg.L();
    return {s.y + L * Point4{d(0), d(1), d(2), d(3)}, s.t + d(4), s.m * exp_so3({d(5), d(6), d(7)})};
  }
  double merit(const OracleState& s) const {
    const auto fq = glued(s);
    if (!fq || !std::isfinite(s.t)) return std::numeric_limits<double>::infinity();
    const double v = rank_one_defect_sq(svd(fq->first)) + rank_one_defect_sq(svd(fq->second));
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  }
  bool converged(const OracleState& s) const {
    const double tol = ctx.sc.newton_tol * ctx.scale;
    return merit(s) <= tol * tol;
  }
};

int nearest_label(const std::array<Rotation, 2>& ms, const Rotation& r) {
  return rotation_distance(ms[0], r) <= rotation_distance(ms[1], r) ? 1 : 2;
}

}  // namespace

OracleResult oracle_enumerate(const BackgroundField& f, const TwoPointConfig& cfg, const SolverConfig& sc,
                              const OracleOptions& opts, Rng& rng) {
  sc.validate();
  const Context ctx(f, cfg, sc);
  const double L = cfg.L();
  const double lmin = opts.lambda_min.value_or(L * L * L);
  const double lmax = opts.lambda_max.value_or(ctx.cutoff);
  if (!(lmin > 0.0 && lmax >= lmin)) throw PreconditionError("oracle_enumerate: bad lambda range");
  const double radius = std::max(admissible_radius(cfg, ctx.t.s_p, ctx.t.s_q, ctx.cutoff), L);

  OracleModel model{ctx};
  detail::LmSettings lm;
  lm.max_iters = opts.max_iters;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<SolutionRecord> found;
  OracleResult out;
  for (std::size_t k = 0; k < opts.n_starts; ++k) {
    // y_I uniform in the ball, y0 uniform in [-L/2, L/2].
    Vec3 dir{gauss(rng), gauss(rng), gauss(rng)};
    const double dn = norm(dir);
    const double rr = radius * std::cbrt(unit(rng));
    dir = (dn > 0.0 ? rr / dn : 0.0) * dir;
    const double y0 = L * (unit(rng) - 0.5);
    const double t0 = std::log(lmin) + unit(rng) * (std::log(lmax) - std::log(lmin));
    const OracleState s0{Point4::from_parts(y0, dir), t0, sample_rotation(rng)};

    const auto res = detail::levenberg_marquardt<8, 8>(s0, model, lm);
    if (!res.converged) continue;
    ++out.converged_starts;
    const GluingData g = model.gluing(res.x);
    const StdInstanton inst{g.y, g.lambda, g.m};
    try {
      const Rotation at_p = Rotation::from_matrix((1.0 / magnitude(inst, cfg.p())) * f_std(inst, cfg.p()), 1e-6);
      const Rotation at_q = Rotation::from_matrix((1.0 / magnitude(inst, cfg.q())) * f_std(inst, cfg.q()), 1e-6);
      const Pairing pr{nearest_label(ctx.t.m_p, at_p), nearest_label(ctx.t.m_q, at_q)};
      if (auto rec = make_record(ctx, g, pr)) insert_unique(found, *rec, L, sc.dedupe_radius);
    } catch (const Error&) {
      continue;
    }
  }

  for (const SolutionRecord& r : found) (r.admissible ? out.solutions : out.rejected).push_back(r);
  std::sort(out.solutions.begin(), out.solutions.end(), record_less);
  std::sort(out.rejected.begin(), out.rejected.end(), record_less);
  attach_signs(f, cfg, out.solutions);
  return out;
}

SetComparison compare_solution_sets(const std::vector<SolutionRecord>& a, const std::vector<SolutionRecord>& b,
                                    double L, double tol) {
  SetComparison out;
  std::vector<bool> used(b.size(), false);
  for (const SolutionRecord& ra : a) {
    bool matched = false;
    for (std::size_t k = 0; k < b.size() && !matched; ++k) {
      if (used[k] || !(b[k].pairing == ra.pairing)) continue;
      if (solution_distance(ra.gluing, b[k].gluing, L) <= tol) {
        used[k] = true;
        matched = true;
      }
    }
    if (!matched) out.only_in_first.push_back(ra);
  }
  for (std::size_t k = 0; k < b.size(); ++k)
    if (!used[k]) out.only_in_second.push_back(b[k]);
  out.agree = out.only_in_first.empty() && out.only_in_second.empty();
  return out;
}

void to_json(nlohmann::json& j, const SolverConfig& c) {
  j = nlohmann::json{{"K", c.K},
                     {"alpha", c.alpha},
                     {"newton_tol", c.newton_tol},
                     {"max_newton_iters", c.max_newton_iters},
                     {"grid_density", c.grid_density},
                     {"dedupe_radius", c.dedupe_radius},
                     {"stratum_tol", c.stratum_tol}};
}

void to_json(nlohmann::json& j, const SolutionRecord& r) {
  const auto& y = r.gluing.y;
  const Quaternion mq = rho_inverse_pair(r.gluing.m).first.value();
  j = nlohmann::json{{"pairing", {r.pairing.i, r.pairing.j}},
                     {"lift", r.lift},
                     {"y", {y.x0, y.x1, y.x2, y.x3}},
                     {"lambda", r.gluing.lambda},
                     {"m_quaternion", {mq.w, mq.x, mq.y, mq.z}},
                     {"sign", r.sign},
                     {"det_ratio", r.det_ratio},
                     {"defect_norm", r.defect_norm},
                     {"residual_p", r.residual_p},
                     {"residual_q", r.residual_q},
                     {"lambda_over_L2", r.lambda_over_L2},
                     {"scale_ratio", r.scale_ratio},
                     {"small_branch", r.small_branch},
                     {"admissible", r.admissible}};
}

nlohmann::json solution_set_json(const BackgroundField& f, const TwoPointConfig& cfg, const SolverConfig& sc,
                                 const SolutionSet& set) {
  nlohmann::json j;
  j["config"] = sc;
  j["L"] = cfg.L();
  j["field_seed"] = f.seed;
  j["field_attempt"] = f.attempt;
  j["field_degree"] = f.degree;
  j["orientation_convention"] = {
      {"domain", "y0 y1 y2 y3 (in units of L), log lambda, omega1 omega2 omega3 with m = m* exp(omega)"},
      {"target", "2x2 transverse block at p (row-major), then at q; frames frozen at the solution"},
      {"reported_positive_det_sign", kOrientationConvention},
      {"reference", "constant background e1 z^T - I, z = (cos 1, sin 1, 0), y = 0, m = I has sign +1"}};
  j["counts"] = set.counts;
  j["count_anomaly"] = set.count_anomaly;
  j["sign_anomaly"] = set.sign_anomaly;
  j["solutions"] = set.solutions;
  j["rejected"] = set.rejected;
  return j;
}

}  // namespace asdglue
