#pragma once

// The projection filter loop: per-step natural-parameter propagation through
// the reduced filter equation and the single moment-matching update of the
// bijection parameters.

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apf/expfam.hpp"

namespace apf {

struct FilterDivergence : std::runtime_error {
  FilterDivergence(const std::string& what, int step_index, double t)
      : std::runtime_error("filter diverged at step " + std::to_string(step_index) +
                           " (t=" + std::to_string(t) + "): " + what),
        step(step_index),
        time(t) {}
  int step;
  double time;
};

struct FilterState {
  Eigen::VectorXd theta;
  Bijection bij;
  double t = 0.0;
  CgfResult cache;  // psi, eta, eta~, fisher computed during the last step
};

struct StepOutcome {
  FilterState next;
  CgfResult at_entry;  // moments of the entering theta (== next.cache)
  int truncated_directions = 0;
};

// One filter step:
//   (1) moments, extended moments and Fisher metric of the current theta
//   (2) d theta = g^{-1} [E[L c] - Cov(c, c~) b_h] dt + lambda dy
//       (the drift of the reduced filter equation in covariance form)
//   (3) bijection re-matched to the pre-update moments.
inline StepOutcome step_detailed(const FilterState& state, double dt,
                                 const Eigen::VectorXd& dy,
                                 const CoefficientDecomposition& decomp,
                                 const QuadratureGrid& grid) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  const ExpFamily& family = decomp.family;
  if (dy.size() != decomp.lambda.cols())
    throw std::invalid_argument("step: measurement dimension mismatch");

  const NodeTable table = make_node_table(family, state.bij, grid);
  CgfResult res = cgf_full(state.theta, family, table);
  const FisherSolver solver(res.fisher);

  // E[L c] - Cov(c, c~) b_h: same drift as a0 + b0 eta + (A0 + eta b_h^T) eta~
  // in covariance form, which stays accurate when b_h carries large entries
  const Eigen::VectorXd rhs =
      decomp.aL0 + decomp.AL * res.eta_ext - res.cov_ext * decomp.b_h;
  Eigen::VectorXd dtheta = solver.solve(rhs) * dt + decomp.lambda * dy;
  if (!dtheta.allFinite())
    throw QuadratureBreakdown("step: non-finite parameter update");

  StepOutcome out;
  out.at_entry = res;
  out.truncated_directions = solver.truncated_directions();
  out.next.theta = state.theta + dtheta;
  out.next.t = state.t + dt;
  out.next.cache = res;
  if (std::holds_alternative<GaussianBijection>(state.bij)) {
    const auto& bij_in = std::get<GaussianBijection>(state.bij);
    auto [mu, sigma] = moment_match_from_family(res.eta_ext, family);
    out.next.bij = make_gaussian_bijection(mu, sigma, bij_in.variant);
  } else {
    out.next.bij = state.bij;
  }
  return out;
}

inline FilterState step(const FilterState& state, double dt, const Eigen::VectorXd& dy,
                        const CoefficientDecomposition& decomp, const QuadratureGrid& grid) {
  return step_detailed(state, dt, dy, decomp, grid).next;
}

// Time-aligned trajectory row: moments evaluated at this row's theta.
struct TrajectoryPoint {
  double t = 0.0;
  Eigen::VectorXd theta;
  double psi = 0.0;
  Eigen::VectorXd eta_ext;
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;
  double cond_fisher = 0.0;
};

struct RunResult {
  std::vector<TrajectoryPoint> trajectory;  // one row per completed step plus t0
  FilterState final_state;
  bool diverged = false;
  int failed_step = -1;
  std::string error;
};

namespace detail {

inline double condition_estimate(const Eigen::MatrixXd& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) return std::numeric_limits<double>::quiet_NaN();
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  return lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
}

inline TrajectoryPoint make_point(double t, const Eigen::VectorXd& theta,
                                  const CgfResult& res, const ExpFamily& family) {
  TrajectoryPoint p;
  p.t = t;
  p.theta = theta;
  p.psi = res.psi;
  p.eta_ext = res.eta_ext;
  auto [mu, sigma] = moment_match_from_family(res.eta_ext, family);
  p.mu = std::move(mu);
  p.sigma = std::move(sigma);
  p.cond_fisher = condition_estimate(res.fisher);
  return p;
}

}  // namespace detail

// Applies step() across the measurement sequence (one row per time step).
// On divergence the result carries every completed row and the failure site.
inline RunResult run(const CoefficientDecomposition& decomp, FilterState init,
                     const QuadratureGrid& grid, double dt,
                     const Eigen::MatrixXd& measurements) {
  RunResult out;
  const int steps = static_cast<int>(measurements.rows());
  out.trajectory.reserve(steps + 1);
  FilterState cur = std::move(init);
  for (int k = 0; k < steps; ++k) {
    StepOutcome o;
    try {
      o = step_detailed(cur, dt, measurements.row(k).transpose(), decomp, grid);
    } catch (const std::exception& ex) {
      out.diverged = true;
      out.failed_step = k;
      out.error = ex.what();
      out.final_state = std::move(cur);
      return out;
    }
    out.trajectory.push_back(detail::make_point(cur.t, cur.theta, o.at_entry, decomp.family));
    cur = std::move(o.next);
  }
  // moments of the final state for the last aligned row
  try {
    const NodeTable table = make_node_table(decomp.family, cur.bij, grid);
    CgfResult res = cgf_full(cur.theta, decomp.family, table);
    cur.cache = res;
    out.trajectory.push_back(detail::make_point(cur.t, cur.theta, res, decomp.family));
  } catch (const std::exception& ex) {
    out.diverged = true;
    out.failed_step = steps;
    out.error = ex.what();
  }
  out.final_state = std::move(cur);
  return out;
}

// Run log CSV: t,theta_1..theta_m,mu_1..mu_d,sigma_11..sigma_dd,psi,cond_g.
inline void write_run_csv(const RunResult& result, std::ostream& os, int thin = 1) {
  if (result.trajectory.empty()) return;
  const int m = static_cast<int>(result.trajectory.front().theta.size());
  const int d = static_cast<int>(result.trajectory.front().mu.size());
  os << 't';
  for (int i = 1; i <= m; ++i) os << ",theta_" << i;
  for (int i = 1; i <= d; ++i) os << ",mu_" << i;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) os << ",sigma_" << i << j;
  os << ",psi,cond_g\n";
  char buf[40];
  auto put = [&](double v, char sep) {
    std::snprintf(buf, sizeof buf, "%.17g%c", v, sep);
    os << buf;
  };
  const int n = static_cast<int>(result.trajectory.size());
  for (int k = 0; k < n; ++k) {
    if (thin > 1 && k % thin != 0 && k != n - 1) continue;
    const auto& p = result.trajectory[k];
    put(p.t, ',');
    for (int i = 0; i < m; ++i) put(p.theta[i], ',');
    for (int i = 0; i < d; ++i) put(p.mu[i], ',');
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) put(p.sigma(i, j), ',');
    put(p.psi, ',');
    put(p.cond_fisher, '\n');
  }
}

}  // namespace apf
