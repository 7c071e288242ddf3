#pragma once

// Finite-difference reference solver for the 1-D filtering density: central
// differences for the Fokker-Planck operator, multiplicative measurement
// update exp(h dy - 1/2 h^2 dt), renormalization each step.

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "apf/metrics.hpp"
#include "apf/model.hpp"

namespace apf {

struct FdOptions {
  std::vector<int> snapshot_steps;  // measurement counts at which to keep the density
  double boundary_tolerance = 1e-12;
};

struct FdSnapshot {
  int step = 0;
  double t = 0.0;
  GridDensity density;
};

struct FdResult {
  std::vector<FdSnapshot> snapshots;
  GridDensity final_density;
  double max_mass_drift = 0.0;  // worst per-step mass change of the drift/diffusion sweep
};

// p0 is given on the cell centers of axis; it is renormalized on entry.
inline FdResult fd_ks_solver_1d(const ModelSpec& model, const GridAxis& axis,
                                const Eigen::VectorXd& p0, double dt,
                                const Eigen::MatrixXd& dys, const FdOptions& options = {}) {
  model.validate();
  if (model.dim() != 1) throw std::invalid_argument("fd_ks_solver_1d: model must be 1-D");
  const int n = axis.cells;
  if (p0.size() != n) throw std::invalid_argument("fd_ks_solver_1d: p0 size mismatch");
  const int steps = static_cast<int>(dys.rows());
  const double dx = axis.step();

  // precompute f and a = (rho Q rho^T)_{11} on the grid
  const auto a_mat = model.diffusion_matrix();
  Eigen::VectorXd fv(n), av(n), hv(n);
  for (int i = 0; i < n; ++i) {
    const double x = axis.center(i);
    const std::span<const double> xs(&x, 1);
    fv[i] = model.drift[0](xs);
    av[i] = a_mat[0][0](xs);
    hv[i] = model.obs[0](xs);
    if (av[i] < 0.0) throw std::invalid_argument("fd_ks_solver_1d: negative diffusion");
  }
  // explicit-Euler stability of the diffusion stencil
  const double amax = av.maxCoeff();
  if (0.5 * amax * dt / (dx * dx) > 0.5)
    throw std::invalid_argument("fd_ks_solver_1d: dt violates the diffusion CFL bound");

  Eigen::VectorXd p = p0.cwiseMax(0.0);
  p /= p.sum() * dx;

  FdResult out;
  auto snapshot_if_requested = [&](int absorbed) {
    for (int s : options.snapshot_steps) {
      if (s == absorbed) {
        FdSnapshot snap;
        snap.step = absorbed;
        snap.t = absorbed * dt;
        snap.density.axes = {axis};
        snap.density.values = p;
        snap.density.cell_volume = dx;
        out.snapshots.push_back(std::move(snap));
        break;
      }
    }
  };

  snapshot_if_requested(0);
  Eigen::VectorXd flux(n), diff(n), pn(n);
  for (int k = 0; k < steps; ++k) {
    // Fokker-Planck: dp/dt = -(f p)' + 1/2 (a p)''
    flux = fv.cwiseProduct(p);
    diff = 0.5 * av.cwiseProduct(p);
    for (int i = 0; i < n; ++i) {
      const double fl = i > 0 ? flux[i - 1] : 0.0;
      const double fr = i + 1 < n ? flux[i + 1] : 0.0;
      const double dl = i > 0 ? diff[i - 1] : 0.0;
      const double dr = i + 1 < n ? diff[i + 1] : 0.0;
      pn[i] = p[i] + dt * (-(fr - fl) / (2.0 * dx)) +
              dt * ((dr - 2.0 * diff[i] + dl) / (dx * dx));
    }
    p.swap(pn);
    out.max_mass_drift = std::max(out.max_mass_drift, std::abs(p.sum() * dx - 1.0));
    // boundary-mass check (zero-density boundary condition)
    if (std::abs(p[0]) > options.boundary_tolerance ||
        std::abs(p[n - 1]) > options.boundary_tolerance)
      throw std::runtime_error("fd_ks_solver_1d: density reached the grid boundary");
    // measurement update, then renormalize
    double emax = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
      emax = std::max(emax, hv[i] * dys(k, 0) - 0.5 * hv[i] * hv[i] * dt);
    for (int i = 0; i < n; ++i) {
      double v = p[i];
      if (v < 0.0) {
        if (v < -1e-10) throw std::runtime_error("fd_ks_solver_1d: negative density");
        v = 0.0;
      }
      p[i] = v * std::exp(hv[i] * dys(k, 0) - 0.5 * hv[i] * hv[i] * dt - emax);
    }
    const double mass = p.sum() * dx;
    if (!(mass > 0.0)) throw std::runtime_error("fd_ks_solver_1d: density vanished");
    p /= mass;
    snapshot_if_requested(k + 1);
  }
  out.final_density.axes = {axis};
  out.final_density.values = p;
  out.final_density.cell_volume = dx;
  return out;
}

}  // namespace apf
