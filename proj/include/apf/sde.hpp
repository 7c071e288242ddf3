#pragma once

// Euler-Maruyama simulation of the state-space model with measurement
// increments, on seed-split deterministic noise streams.

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>

#include "apf/model.hpp"

namespace apf {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent substreams per consumer: stream ids keep truth noise,
// measurement noise and particle-filter noise decoupled for a given seed.
enum class NoiseStream : std::uint64_t {
  StateNoise = 1,
  MeasurementNoise = 2,
  ParticleFilter = 3,
  InitialSampler = 4,
};

class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, NoiseStream stream)
      : engine_(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(stream)))) {}

  double next() { return normal_(engine_); }

  double uniform() { return uniform_(engine_); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

struct SimulationOutput {
  Eigen::VectorXd times;   // steps + 1 entries
  Eigen::MatrixXd states;  // (steps + 1) x d, row k is x at t_k
  Eigen::MatrixXd dy;      // steps x d_y, row k is the increment over [t_k, t_k+dt]
  std::uint64_t seed = 0;
};

// dy_k = h(x_k) dt + sqrt(dt) eps_k with unit measurement spectral density.
inline SimulationOutput simulate(const ModelSpec& model, const Eigen::VectorXd& x0,
                                 double dt, int steps, std::uint64_t seed) {
  model.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("simulate: dt must be positive");
  const int d = model.dim();
  const int dw = model.noise_dim();
  const int dy_dim = model.obs_dim();
  if (x0.size() != d) throw std::invalid_argument("simulate: x0 dimension mismatch");

  GaussianStream state_noise(seed, NoiseStream::StateNoise);
  GaussianStream meas_noise(seed, NoiseStream::MeasurementNoise);

  const Eigen::MatrixXd q_sqrt = [&] {
    Eigen::LLT<Eigen::MatrixXd> llt(model.q);
    if (llt.info() != Eigen::Success)
      throw std::invalid_argument("simulate: Q must be positive definite");
    return Eigen::MatrixXd(llt.matrixL());
  }();

  SimulationOutput out;
  out.seed = seed;
  out.times.resize(steps + 1);
  out.states.resize(steps + 1, d);
  out.dy.resize(steps, dy_dim);
  const double sdt = std::sqrt(dt);

  Eigen::VectorXd x = x0;
  Eigen::VectorXd eps(dw), fval(d);
  for (int k = 0; k <= steps; ++k) {
    out.times[k] = k * dt;
    out.states.row(k) = x.transpose();
    if (k == steps) break;
    const std::span<const double> xs(x.data(), d);
    for (int j = 0; j < dy_dim; ++j)
      out.dy(k, j) = model.obs[j](xs) * dt + sdt * meas_noise.next();
    for (int i = 0; i < d; ++i) fval[i] = model.drift[i](xs);
    for (int j = 0; j < dw; ++j) eps[j] = state_noise.next();
    const Eigen::VectorXd dw_vec = q_sqrt * eps * sdt;
    Eigen::VectorXd diff = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < dw; ++j) {
        if (dw_vec[j] == 0.0) continue;
        diff[i] += model.rho[i][j](xs) * dw_vec[j];
      }
    x += fval * dt + diff;
  }
  return out;
}

}  // namespace apf
