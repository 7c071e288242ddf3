#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "apf/fd_solver.hpp"
#include "apf/kalman_bucy.hpp"
#include "apf/particle_filter.hpp"
#include "apf/sde.hpp"
#include "models_for_tests.hpp"

using apf::GridAxis;

TEST_CASE("zero-diffusion drift integrates exactly") {
  apf::ModelSpec m;
  m.drift = {apf::SparsePolynomial::constant(1, 0.25)};
  m.rho = {{apf::SparsePolynomial(1)}};
  m.q = Eigen::MatrixXd::Identity(1, 1);
  m.obs = {apf::SparsePolynomial::monomial({1})};
  Eigen::VectorXd x0(1);
  x0 << 1.0;
  auto sim = apf::simulate(m, x0, 1e-3, 1000, 7);
  CHECK(sim.states(1000, 0) == Catch::Approx(1.25).margin(1e-12));
  CHECK(sim.times[1000] == Catch::Approx(1.0));
}

TEST_CASE("diffusion variance matches sigma^2 T over many seeds") {
  apf::ModelSpec m;
  m.drift = {apf::SparsePolynomial(1)};
  m.rho = {{apf::SparsePolynomial::constant(1, 0.7)}};
  m.q = Eigen::MatrixXd::Identity(1, 1);
  m.obs = {apf::SparsePolynomial::monomial({1})};
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(1);
  const double dt = 1e-3, T = 0.1;
  const int steps = static_cast<int>(T / dt);
  double sum = 0.0, sum2 = 0.0;
  const int trials = 10000;
  for (int s = 0; s < trials; ++s) {
    auto sim = apf::simulate(m, x0, dt, steps, 1000 + s);
    const double xT = sim.states(steps, 0);
    sum += xT;
    sum2 += xT * xT;
  }
  const double var = sum2 / trials - (sum / trials) * (sum / trials);
  CHECK(std::abs(var - 0.49 * T) / (0.49 * T) < 0.05);
}

TEST_CASE("measurement increments with h=0 are pure noise of variance dt") {
  apf::ModelSpec m;
  m.drift = {apf::SparsePolynomial(1)};
  m.rho = {{apf::SparsePolynomial::constant(1, 1.0)}};
  m.q = Eigen::MatrixXd::Identity(1, 1);
  m.obs = {apf::SparsePolynomial(1)};
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(1);
  const double dt = 1e-3;
  auto sim = apf::simulate(m, x0, dt, 20000, 5);
  const double var = sim.dy.col(0).squaredNorm() / sim.dy.rows() -
                     std::pow(sim.dy.col(0).mean(), 2);
  CHECK(std::abs(var - dt) / dt < 0.05);
}

TEST_CASE("simulation is reproducible from its seed") {
  auto model = apf_test::cubic_sensor();
  Eigen::VectorXd x0(1);
  x0 << 1.0;
  auto s1 = apf::simulate(model, x0, 1e-3, 200, 42);
  auto s2 = apf::simulate(model, x0, 1e-3, 200, 42);
  CHECK(s1.states == s2.states);
  CHECK(s1.dy == s2.dy);
  auto s3 = apf::simulate(model, x0, 1e-3, 200, 43);
  CHECK(s1.dy != s3.dy);
}

TEST_CASE("systematic resampling splits even weights one copy each") {
  Eigen::VectorXd w(2);
  w << 0.5, 0.5;
  for (double u : {0.0, 0.3, 0.7, 0.999}) {
    auto idx = apf::systematic_resample(w, u);
    REQUIRE(idx.size() == 2);
    CHECK(idx[0] == 0);
    CHECK(idx[1] == 1);
  }
}

TEST_CASE("systematic resampling offspring counts are unbiased") {
  Eigen::VectorXd w(4);
  w << 0.1, 0.2, 0.3, 0.4;
  Eigen::Vector4d counts = Eigen::Vector4d::Zero();
  apf::GaussianStream rng(2024, apf::NoiseStream::ParticleFilter);
  const int trials = 20000;
  for (int t = 0; t < trials; ++t) {
    auto idx = apf::systematic_resample(w, rng.uniform());
    for (int i : idx) counts[i] += 1.0;
  }
  for (int i = 0; i < 4; ++i) {
    const double expected = 4.0 * w[i];
    CHECK(std::abs(counts[i] / trials - expected) / expected < 0.02);
  }
}

TEST_CASE("uninformative observations keep weights uniform and skip resampling") {
  apf::ModelSpec m;
  m.drift = {apf::SparsePolynomial::monomial({1}, -1.0)};
  m.rho = {{apf::SparsePolynomial::constant(1, 1.0)}};
  m.q = Eigen::MatrixXd::Identity(1, 1);
  m.obs = {apf::SparsePolynomial(1)};  // h == 0
  Eigen::MatrixXd dys = Eigen::MatrixXd::Zero(100, 1);
  auto res = apf::bootstrap_pf(
      m, 500, [](apf::GaussianStream& g) { return Eigen::VectorXd::Constant(1, g.next()); },
      1e-2, dys, 1);
  CHECK(res.resample_count == 0);
  CHECK((res.final_w.array() - 1.0 / 500).abs().maxCoeff() < 1e-15);
}

TEST_CASE("particle filter posterior mean tracks Kalman-Bucy on the linear model") {
  auto model = apf_test::linear_1d();
  const double dt = 1e-3;
  const int steps = 1000;
  Eigen::VectorXd x0(1);
  x0 << 0.5;
  auto sim = apf::simulate(model, x0, dt, steps, 11);

  apf::PfOptions opt;
  for (int k = 100; k <= steps; k += 100) opt.snapshot_steps.push_back(k);
  auto pf = apf::bootstrap_pf(
      model, 20000,
      [](apf::GaussianStream& g) { return Eigen::VectorXd::Constant(1, g.next()); }, dt,
      sim.dy, 11, opt);

  Eigen::MatrixXd a(1, 1), h(1, 1), q(1, 1), p0(1, 1);
  a << -1.0;
  h << 1.0;
  q << 1.0;
  p0 << 1.0;
  auto kb = apf::kalman_bucy(a, h, q, Eigen::VectorXd::Zero(1), p0, dt, sim.dy);

  double se = 0.0;
  for (const auto& snap : pf.snapshots) {
    const double mean = snap.w.dot(snap.x.col(0));
    se += std::pow(mean - kb.means(snap.step, 0), 2);
  }
  CHECK(std::sqrt(se / pf.snapshots.size()) < 0.05);
}

TEST_CASE("FD solver reproduces heat-equation variance growth") {
  apf::ModelSpec m;
  m.drift = {apf::SparsePolynomial(1)};
  m.rho = {{apf::SparsePolynomial::constant(1, 1.0)}};
  m.q = Eigen::MatrixXd::Identity(1, 1);
  m.obs = {apf::SparsePolynomial(1)};
  GridAxis axis{-6.0, 6.0, 1000};
  Eigen::VectorXd p0(axis.cells);
  const double s0 = 0.25;
  for (int i = 0; i < axis.cells; ++i) {
    const double x = axis.center(i);
    p0[i] = std::exp(-0.5 * x * x / s0);
  }
  const double dt = 1e-4, T = 0.1;
  Eigen::MatrixXd dys = Eigen::MatrixXd::Zero(static_cast<int>(T / dt), 1);
  auto res = apf::fd_ks_solver_1d(m, axis, p0, dt, dys);
  double mean = 0.0, second = 0.0;
  for (int i = 0; i < axis.cells; ++i) {
    const double x = axis.center(i);
    mean += x * res.final_density.values[i];
    second += x * x * res.final_density.values[i];
  }
  mean *= axis.step();
  second *= axis.step();
  const double var = second - mean * mean;
  CHECK(std::abs(var - (s0 + T)) / (s0 + T) < 0.01);
  CHECK(res.max_mass_drift < 1e-8);
}

TEST_CASE("FD solver relaxes to the Ornstein-Uhlenbeck stationary law") {
  auto model = apf_test::linear_1d();  // f = -x, sigma = 1
  model.obs = {apf::SparsePolynomial(1)};
  GridAxis axis{-6.0, 6.0, 1000};
  Eigen::VectorXd p0(axis.cells);
  for (int i = 0; i < axis.cells; ++i) {
    const double x = axis.center(i);
    p0[i] = std::exp(-0.5 * (x - 0.4) * (x - 0.4) / 0.3);
  }
  const double dt = 1e-4, T = 10.0;
  Eigen::MatrixXd dys = Eigen::MatrixXd::Zero(static_cast<int>(T / dt), 1);
  auto res = apf::fd_ks_solver_1d(model, axis, p0, dt, dys);

  apf::GridDensity stat = apf::GridDensity::zeros({axis});
  for (int i = 0; i < axis.cells; ++i) {
    const double x = axis.center(i);
    stat.values[i] = std::exp(-x * x) / std::sqrt(std::numbers::pi);  // N(0, 1/2)
  }
  CHECK(apf::hellinger(res.final_density, stat) < 0.01);
}

TEST_CASE("FD measurement step renormalizes") {
  auto model = apf_test::linear_1d();
  GridAxis axis{-6.0, 6.0, 600};
  Eigen::VectorXd p0(axis.cells);
  for (int i = 0; i < axis.cells; ++i) {
    const double x = axis.center(i);
    p0[i] = std::exp(-2.0 * x * x);
  }
  Eigen::MatrixXd dys(1, 1);
  dys << 0.3;
  auto res = apf::fd_ks_solver_1d(model, axis, p0, 1e-4, dys);
  CHECK(std::abs(res.final_density.integral() - 1.0) < 1e-12);
}

TEST_CASE("Kalman-Bucy closed forms") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(1, 1);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(1, 1);
  Eigen::MatrixXd q(1, 1);
  q << 0.04;
  Eigen::MatrixXd p0(1, 1);
  p0 << 1.0;
  const int steps = 1000;
  auto res = apf::kalman_bucy(a, h, q, Eigen::VectorXd::Zero(1), p0, 1e-3,
                              Eigen::MatrixXd::Zero(steps, 1));
  CHECK(res.covs.back()(0, 0) == Catch::Approx(1.0 + 0.04).margin(1e-12));

  // steady state of A=-1, H=1, sigma=1: P solves -2P + 1 - P^2 = 0
  Eigen::MatrixXd am(1, 1), hm(1, 1), qm(1, 1);
  am << -1.0;
  hm << 1.0;
  qm << 1.0;
  auto res2 = apf::kalman_bucy(am, hm, qm, Eigen::VectorXd::Zero(1), p0, 1e-4,
                               Eigen::MatrixXd::Zero(100000, 1));
  CHECK(std::abs(res2.covs.back()(0, 0) - (std::numbers::sqrt2 - 1.0)) < 1e-6);

  // dt refinement at matched horizon T=1 changes P(T) only at first order
  auto fine = apf::kalman_bucy(am, hm, qm, Eigen::VectorXd::Zero(1), p0, 1e-4,
                               Eigen::MatrixXd::Zero(10000, 1));
  auto coarse = apf::kalman_bucy(am, hm, qm, Eigen::VectorXd::Zero(1), p0, 2e-4,
                                 Eigen::MatrixXd::Zero(5000, 1));
  const double diff = std::abs(coarse.covs.back()(0, 0) - fine.covs.back()(0, 0));
  CHECK(diff < 1e-4);
}

TEST_CASE("empirical density: delta case, sampling oracle, coverage warning") {
  // all particles in one cell
  Eigen::MatrixXd pts = Eigen::MatrixXd::Constant(100, 1, 0.51);
  auto delta = apf::empirical_density(pts, {GridAxis{0.0, 1.0, 10}});
  CHECK(delta.coverage == Catch::Approx(1.0).margin(1e-12));
  CHECK(std::abs(delta.density.integral() - 1.0) < 1e-12);
  CHECK(delta.density.values.maxCoeff() == Catch::Approx(10.0));

  // large standard-normal sample vs the analytic density
  apf::GaussianStream g(99, apf::NoiseStream::InitialSampler);
  const int n = 1000000;
  Eigen::MatrixXd sample(n, 1);
  for (int i = 0; i < n; ++i) sample(i, 0) = g.next();
  GridAxis axis{-5.0, 5.0, 200};
  auto emp = apf::empirical_density(sample, {axis});
  apf::GridDensity ref = apf::GridDensity::zeros({axis});
  for (int i = 0; i < axis.cells; ++i) {
    const double x = axis.center(i);
    ref.values[i] = std::exp(-0.5 * x * x) / std::sqrt(2 * std::numbers::pi);
  }
  CHECK(apf::hellinger(emp.density, ref) < 0.01);

  // clipped grid flags low coverage
  auto clipped = apf::empirical_density(sample, {GridAxis{-5.0, 1.0, 120}});
  CHECK(clipped.coverage < 0.999);
}
