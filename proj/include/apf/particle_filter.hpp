#pragma once

// Bootstrap particle filter with systematic resampling, and histogram
// densities of weighted particle sets on fixed grids.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "apf/metrics.hpp"
#include "apf/model.hpp"
#include "apf/sde.hpp"

namespace apf {

// Systematic resampling: one uniform draw u, thresholds (u+i)/n against the
// cumulative normalized weights.  Expected offspring of particle i is n w_i.
inline std::vector<int> systematic_resample(const Eigen::VectorXd& weights, double u) {
  const int n = static_cast<int>(weights.size());
  if (n == 0) throw std::invalid_argument("systematic_resample: empty weights");
  if (!(u >= 0.0 && u < 1.0))
    throw std::invalid_argument("systematic_resample: u must lie in [0,1)");
  std::vector<int> idx(n);
  double cum = weights[0];
  int j = 0;
  for (int i = 0; i < n; ++i) {
    const double pos = (u + i) / n;
    // particle j owns [cum_{j-1}, cum_j); a threshold on the boundary advances
    while (cum <= pos && j + 1 < n) cum += weights[++j];
    idx[i] = j;
  }
  return idx;
}

struct ParticleSnapshot {
  int step = 0;        // snapshot taken after absorbing dy up to this step index
  double t = 0.0;
  Eigen::MatrixXd x;   // n x d
  Eigen::VectorXd w;   // normalized weights
};

struct PfOptions {
  // steps (1-based count of absorbed measurements) at which to keep a snapshot
  std::vector<int> snapshot_steps;
  double ess_fraction = 0.5;  // resample when ESS < n * fraction
};

struct PfResult {
  std::vector<ParticleSnapshot> snapshots;
  Eigen::MatrixXd final_x;
  Eigen::VectorXd final_w;
  int resample_count = 0;
};

// Per measurement step: Euler-Maruyama propagation, log-weight increment
// h^T dy - 1/2 h^T h dt, then systematic resampling when the effective sample
// size drops below the threshold.  A snapshot at step k holds the particle
// approximation of the filter distribution at t_k given dy_0..dy_{k-1}.
inline PfResult bootstrap_pf(const ModelSpec& model, int n_particles,
                             const std::function<Eigen::VectorXd(GaussianStream&)>& x0_sampler,
                             double dt, const Eigen::MatrixXd& dys, std::uint64_t seed,
                             const PfOptions& options = {}) {
  model.validate();
  if (n_particles < 2) throw std::invalid_argument("bootstrap_pf: need at least 2 particles");
  const int d = model.dim();
  const int dw = model.noise_dim();
  const int dy_dim = model.obs_dim();
  const int steps = static_cast<int>(dys.rows());
  if (dys.cols() != dy_dim) throw std::invalid_argument("bootstrap_pf: dy dimension mismatch");

  GaussianStream noise(seed, NoiseStream::ParticleFilter);
  GaussianStream init(seed, NoiseStream::InitialSampler);

  const Eigen::MatrixXd q_sqrt = [&] {
    Eigen::LLT<Eigen::MatrixXd> llt(model.q);
    if (llt.info() != Eigen::Success)
      throw std::invalid_argument("bootstrap_pf: Q must be positive definite");
    return Eigen::MatrixXd(llt.matrixL());
  }();

  Eigen::MatrixXd x(n_particles, d);
  for (int p = 0; p < n_particles; ++p) {
    Eigen::VectorXd s = x0_sampler(init);
    if (s.size() != d) throw std::invalid_argument("bootstrap_pf: sampler dimension mismatch");
    x.row(p) = s.transpose();
  }
  Eigen::VectorXd logw = Eigen::VectorXd::Zero(n_particles);

  PfResult result;
  const double sdt = std::sqrt(dt);
  Eigen::MatrixXd xn(n_particles, d);
  Eigen::VectorXd eps(dw);
  std::vector<double> hval(dy_dim);

  auto normalized_weights = [&]() {
    Eigen::VectorXd w = (logw.array() - logw.maxCoeff()).exp();
    const double s = w.sum();
    if (!(s > 0.0)) throw std::runtime_error("bootstrap_pf: weight degeneracy (all zero)");
    return Eigen::VectorXd(w / s);
  };

  auto snapshot_if_requested = [&](int absorbed) {
    for (int s : options.snapshot_steps) {
      if (s == absorbed) {
        ParticleSnapshot snap;
        snap.step = absorbed;
        snap.t = absorbed * dt;
        snap.x = x;
        snap.w = normalized_weights();
        result.snapshots.push_back(std::move(snap));
        break;
      }
    }
  };

  snapshot_if_requested(0);
  for (int k = 0; k < steps; ++k) {
    // propagate to t_{k+1}
    for (int p = 0; p < n_particles; ++p) {
      Eigen::VectorXd xp = x.row(p).transpose();
      const std::span<const double> xv(xp.data(), d);
      for (int j = 0; j < dw; ++j) eps[j] = noise.next();
      const Eigen::VectorXd dw_vec = q_sqrt * eps * sdt;
      for (int i = 0; i < d; ++i) {
        double v = xp[i] + model.drift[i](xv) * dt;
        for (int j = 0; j < dw; ++j)
          if (dw_vec[j] != 0.0) v += model.rho[i][j](xv) * dw_vec[j];
        xn(p, i) = v;
      }
    }
    x.swap(xn);
    // weight with dy_k
    for (int p = 0; p < n_particles; ++p) {
      Eigen::VectorXd xp = x.row(p).transpose();
      const std::span<const double> xv(xp.data(), d);
      double inc = 0.0;
      for (int j = 0; j < dy_dim; ++j) {
        const double h = model.obs[j](xv);
        inc += h * dys(k, j) - 0.5 * h * h * dt;
      }
      logw[p] += inc;
    }
    Eigen::VectorXd w = normalized_weights();
    const double ess = 1.0 / w.squaredNorm();
    if (ess < options.ess_fraction * n_particles) {
      const std::vector<int> idx = systematic_resample(w, noise.uniform());
      for (int p = 0; p < n_particles; ++p) xn.row(p) = x.row(idx[p]);
      x.swap(xn);
      logw.setZero();
      ++result.resample_count;
    }
    snapshot_if_requested(k + 1);
  }
  result.final_x = std::move(x);
  result.final_w = normalized_weights();
  return result;
}

struct EmpiricalDensity {
  GridDensity density;
  double coverage = 1.0;  // fraction of particle mass inside the grid
};

// Weighted histogram normalized to integrate to one over the grid.  Callers
// should treat coverage < 0.999 as a warning that the grid clips the cloud.
inline EmpiricalDensity empirical_density(const Eigen::MatrixXd& particles,
                                          const Eigen::VectorXd& weights,
                                          std::vector<GridAxis> axes) {
  const int n = static_cast<int>(particles.rows());
  if (n == 0) throw std::invalid_argument("empirical_density: empty particle set");
  const int d = static_cast<int>(axes.size());
  if (particles.cols() != d)
    throw std::invalid_argument("empirical_density: dimension mismatch");
  EmpiricalDensity out;
  out.density = GridDensity::zeros(std::move(axes));
  double inside = 0.0;
  std::vector<int> cell(d);
  for (int p = 0; p < n; ++p) {
    bool in = true;
    for (int k = 0; k < d && in; ++k) {
      const auto& a = out.density.axes[k];
      const double v = particles(p, k);
      const int c = static_cast<int>(std::floor((v - a.min) / a.step()));
      if (c < 0 || c >= a.cells) in = false;
      else cell[k] = c;
    }
    if (!in) continue;
    const double w = weights.size() ? weights[p] : 1.0 / n;
    out.density.values[out.density.flat_index(cell)] += w;
    inside += w;
  }
  if (inside <= 0.0) throw std::invalid_argument("empirical_density: no particles on grid");
  out.coverage = inside;
  out.density.values /= inside * out.density.cell_volume;
  return out;
}

inline EmpiricalDensity empirical_density(const Eigen::MatrixXd& particles,
                                          std::vector<GridAxis> axes) {
  return empirical_density(particles, Eigen::VectorXd(), std::move(axes));
}

}  // namespace apf
