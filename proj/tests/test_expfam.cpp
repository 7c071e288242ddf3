#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "apf/expfam.hpp"

using apf::Bijection;
using apf::ExpFamily;
using apf::GaussianBijection;
using apf::QuadratureGrid;
using apf::StaticBijection;

namespace {

GaussianBijection bij1d(double mu, double s2, GaussianBijection::Variant v) {
  Eigen::VectorXd m(1);
  m << mu;
  Eigen::MatrixXd s(1, 1);
  s << s2;
  return apf::make_gaussian_bijection(m, s, v);
}

QuadratureGrid gh1d(int n) { return apf::grid_from_rule(apf::gauss_hermite_1d(n)); }
QuadratureGrid gc1d(int n) { return apf::grid_from_rule(apf::gauss_chebyshev(n)); }

// Dense trapezoid oracle for the 1-D quartic family on [-6,6].
struct DenseOracle {
  double psi;
  double mean;
  double var;
};

DenseOracle dense_oracle(const Eigen::VectorXd& theta, int points = 20001) {
  const double lo = -6.0, hi = 6.0;
  const double dx = (hi - lo) / (points - 1);
  double z = 0.0, m1 = 0.0, m2 = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = lo + i * dx;
    double e = 0.0, xp = x;
    for (int k = 0; k < theta.size(); ++k) {
      e += theta[k] * xp;
      xp *= x;
    }
    const double w = (i == 0 || i == points - 1) ? 0.5 : 1.0;
    const double f = w * std::exp(e);
    z += f;
    m1 += f * x;
    m2 += f * x * x;
  }
  z *= dx;
  m1 *= dx;
  m2 *= dx;
  DenseOracle o;
  o.psi = std::log(z);
  o.mean = m1 / z;
  o.var = m2 / z - o.mean * o.mean;
  return o;
}

const Eigen::VectorXd kQuarticTheta0 = [] {
  Eigen::VectorXd t(4);
  t << 0.0, 2.0, 0.0, -1.0;
  return t;
}();

}  // namespace

TEST_CASE("matched Hermite bijection reproduces the Gaussian psi exactly") {
  auto family = ExpFamily::monomials(1, 2);
  Eigen::VectorXd theta(2);
  theta << 0.0, -0.5;
  auto b = bij1d(0.0, 1.0, GaussianBijection::Variant::HermiteAffine);
  for (int level = 1; level <= 4; ++level) {
    const double psi =
        apf::log_partition(theta, family, b, gh1d(apf::level_node_count(level)));
    CHECK(std::abs(psi - 0.5 * std::log(2 * std::numbers::pi)) < 1e-12);
  }
}

TEST_CASE("shifted Gaussian psi in closed form") {
  auto family = ExpFamily::monomials(1, 2);
  Eigen::VectorXd theta(2);
  theta << 1.0, -0.5;  // N(1, 1)
  auto b = bij1d(1.0, 1.0, GaussianBijection::Variant::HermiteAffine);
  const double psi = apf::log_partition(theta, family, b, gh1d(7));
  CHECK(std::abs(psi - (0.5 + 0.5 * std::log(2 * std::numbers::pi))) < 1e-12);
}

TEST_CASE("quartic psi against the dense oracle") {
  auto family = ExpFamily::monomials(1, 4);
  const DenseOracle oracle = dense_oracle(kQuarticTheta0);
  // frozen oracle values guard the oracle itself
  CHECK(std::abs(oracle.psi - 1.6799262428937864) < 1e-10);
  CHECK(std::abs(oracle.var - 0.8327454871283800) < 1e-10);

  // GCQ-9 with the moment-matched erf bijection: the sqrt(1-x~^2) factor in
  // the transformed integrand bounds first-kind Chebyshev accuracy near
  // 4/(4n^2-1); measured |psi error| is 1.2e-3 at the fixed point
  auto b9 = apf::picard_solve(kQuarticTheta0, family,
                              bij1d(0.0, 1.0, GaussianBijection::Variant::ErfHypercube),
                              gc1d(9));
  const double psi9 = apf::log_partition(kQuarticTheta0, family, b9, gc1d(9));
  CHECK(std::abs(psi9 - oracle.psi) < 2e-3);

  // the same construction converges to the oracle as nodes are added
  auto b63 = apf::picard_solve(kQuarticTheta0, family,
                               bij1d(0.0, 1.0, GaussianBijection::Variant::ErfHypercube),
                               gc1d(63));
  const double psi63 = apf::log_partition(kQuarticTheta0, family, b63, gc1d(63));
  CHECK(std::abs(psi63 - oracle.psi) < 1e-6);
}

TEST_CASE("moments and Fisher of the standard Gaussian member") {
  auto family = ExpFamily::monomials(1, 2);
  Eigen::VectorXd theta(2);
  theta << 0.0, -0.5;
  auto res = apf::moments_and_fisher(
      theta, family, bij1d(0.0, 1.0, GaussianBijection::Variant::HermiteAffine), gh1d(15));
  CHECK(std::abs(res.eta[0] - 0.0) < 1e-12);
  CHECK(std::abs(res.eta[1] - 1.0) < 1e-12);
  Eigen::MatrixXd expect(2, 2);
  expect << 1, 0, 0, 2;
  CHECK((res.fisher - expect).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("moments of N(1,4) through natural parameters") {
  auto family = ExpFamily::monomials(1, 2);
  const double mu = 1.0, s2 = 4.0;
  Eigen::VectorXd theta(2);
  theta << mu / s2, -0.5 / s2;
  auto res = apf::moments_and_fisher(
      theta, family, bij1d(mu, s2, GaussianBijection::Variant::HermiteAffine), gh1d(15));
  CHECK(std::abs(res.eta[0] - 1.0) < 1e-10);
  CHECK(std::abs(res.eta[1] - 5.0) < 1e-10);
}

TEST_CASE("jet derivatives equal the quadrature-ratio formulas") {
  auto family = ExpFamily::monomials(1, 4);
  auto b = bij1d(0.1, 0.9, GaussianBijection::Variant::ErfHypercube);
  auto grid = gc1d(15);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int rep = 0; rep < 20; ++rep) {
    Eigen::VectorXd theta(4);
    theta << u(rng), 2.0 + u(rng), u(rng), -1.0 + 0.3 * u(rng);
    auto ad = apf::moments_and_fisher(theta, family, b, grid);
    auto ratio = apf::ratio_moments(theta, family, b, grid);
    CHECK(std::abs(ad.psi - ratio.psi) < 1e-12 * std::max(1.0, std::abs(ad.psi)));
    CHECK((ad.eta - ratio.eta).cwiseAbs().maxCoeff() <
          1e-9 * std::max(1.0, ratio.eta.cwiseAbs().maxCoeff()));
    CHECK((ad.fisher - ratio.fisher).cwiseAbs().maxCoeff() <
          1e-9 * std::max(1.0, ratio.fisher.cwiseAbs().maxCoeff()));
    // part 4 with f == 1 is exactly the self-normalization
    auto one = apf::SparsePolynomial::constant(1, 1.0);
    CHECK(std::abs(apf::expectation_ratio(one, theta, family, b, grid) - 1.0) < 1e-12);
  }
}

TEST_CASE("expectation_ratio basics") {
  auto family = ExpFamily::monomials(1, 2);
  Eigen::VectorXd theta(2);
  theta << 0.0, -0.5;
  auto b = bij1d(0.0, 1.0, GaussianBijection::Variant::HermiteAffine);
  auto grid = gh1d(15);
  auto x = apf::SparsePolynomial::monomial({1});
  CHECK(std::abs(apf::expectation_ratio(x, theta, family, b, grid)) < 1e-12);

  // E[x^3] of N(0.5, 1) = mu^3 + 3 mu s2 = 1.625, Hermite level 4
  const double mu = 0.5, s2 = 1.0;
  Eigen::VectorXd th(2);
  th << mu / s2, -0.5 / s2;
  auto b2 = bij1d(mu, s2, GaussianBijection::Variant::HermiteAffine);
  auto cube = apf::SparsePolynomial::monomial({3});
  const double got =
      apf::expectation_ratio(cube, th, family, b2, gh1d(apf::level_node_count(4)));
  CHECK(std::abs(got - 1.625) < 1e-6);
}

TEST_CASE("extended expectations agree with the base moments and Gaussian limits") {
  auto family = ExpFamily::monomials(1, 4);
  // extend to degree 10 as the cubic-sensor closure does
  std::vector<apf::MultiIndex> ext;
  for (int dgr = 5; dgr <= 10; ++dgr) ext.push_back({dgr});
  family.set_extension(ext);

  Eigen::VectorXd theta(4);
  theta << 0.0, -0.5, 0.0, -1e-8;  // essentially N(0,1)
  auto b = bij1d(0.0, 1.0, GaussianBijection::Variant::ErfHypercube);
  auto grid = gc1d(15);

  auto eta_ext = apf::extended_expectations(theta, family, b, grid);
  auto base = apf::moments_and_fisher(theta, family, b, grid);
  CHECK((eta_ext.head(4) - base.eta).cwiseAbs().maxCoeff() < 1e-9);

  // odd moment vanishes by symmetry of the matched grid
  auto pos5 = family.find_monomial({5});
  REQUIRE(pos5.has_value());
  CHECK(std::abs(eta_ext[pos5->first]) < 1e-6);

  // E[x^6] = 15 for the standard normal; first-kind Chebyshev at 15 nodes
  // carries a percent-level bias (the sqrt factor again), while the Hermite
  // route is polynomially exact
  auto pos6 = family.find_monomial({6});
  REQUIRE(pos6.has_value());
  CHECK(std::abs(eta_ext[pos6->first] - 15.0) < 0.8);

  auto bh = bij1d(0.0, 1.0, GaussianBijection::Variant::HermiteAffine);
  auto eta_gh = apf::extended_expectations(theta, family, bh, gh1d(15));
  CHECK(std::abs(eta_gh[pos6->first] - 15.0) < 1e-3);
}

TEST_CASE("normalization defect: matched case, static failure mode, level sweep") {
  auto gaussian = ExpFamily::monomials(1, 2);
  Eigen::VectorXd theta(2);
  theta << 0.0, -0.5;
  const double psi_true = 0.5 * std::log(2 * std::numbers::pi);
  CHECK(std::abs(apf::normalization_defect(
            theta, gaussian, bij1d(0.0, 1.0, GaussianBijection::Variant::HermiteAffine),
            gh1d(7), psi_true)) < 1e-12);

  // static atanh bijection with the mean shifted to pi/2: large defect
  Eigen::VectorXd shifted(2);
  shifted << std::numbers::pi / 2, -0.5;
  const double psi_shifted = 0.5 * std::numbers::pi * std::numbers::pi / 4 +
                             0.5 * std::log(2 * std::numbers::pi);
  const double defect = apf::normalization_defect(shifted, gaussian, StaticBijection{},
                                                  gc1d(16), psi_shifted);
  CHECK(std::abs(defect) > 1e-2);

  // adaptive bijection on the quartic family: defect shrinks with the level
  auto quartic = ExpFamily::monomials(1, 4);
  const DenseOracle oracle = dense_oracle(kQuarticTheta0);
  double prev = 1.0;
  for (int n : {15, 31, 63}) {
    auto b = apf::picard_solve(kQuarticTheta0, quartic,
                               bij1d(0.0, 1.0, GaussianBijection::Variant::ErfHypercube),
                               gc1d(n));
    const double d = std::abs(
        apf::normalization_defect(kQuarticTheta0, quartic, b, gc1d(n), oracle.psi));
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("defect-squared gradient matches finite differences of the defect") {
  auto family = ExpFamily::monomials(1, 4);
  const DenseOracle oracle = dense_oracle(kQuarticTheta0);
  auto grid = gc1d(15);
  const double mu = 0.3, s2 = 0.9;

  auto defect_at = [&](double m, double v) {
    auto b = bij1d(m, v, GaussianBijection::Variant::ErfHypercube);
    return apf::normalization_defect(kQuarticTheta0, family, b, grid, oracle.psi);
  };
  auto b = bij1d(mu, s2, GaussianBijection::Variant::ErfHypercube);
  Eigen::Vector2d grad =
      apf::defect_sq_gradient_1d(kQuarticTheta0, family, b, grid, oracle.psi);

  const double h = 1e-6;
  const double fd_mu =
      (std::pow(defect_at(mu + h, s2), 2) - std::pow(defect_at(mu - h, s2), 2)) / (2 * h);
  const double fd_s2 =
      (std::pow(defect_at(mu, s2 + h), 2) - std::pow(defect_at(mu, s2 - h), 2)) / (2 * h);
  CHECK(std::abs(grad[0] - fd_mu) / std::abs(fd_mu) < 1e-4);
  CHECK(std::abs(grad[1] - fd_s2) / std::abs(fd_s2) < 1e-4);
}

TEST_CASE("psi is invariant under node reordering") {
  auto family = ExpFamily::monomials(1, 4);
  auto grid = gc1d(31);
  auto b = bij1d(0.2, 0.8, GaussianBijection::Variant::ErfHypercube);
  const double psi = apf::log_partition(kQuarticTheta0, family, b, grid);

  QuadratureGrid reversed = grid;
  reversed.nodes = grid.nodes.colwise().reverse().eval();
  reversed.weights = grid.weights.reverse().eval();
  const double psi_r = apf::log_partition(kQuarticTheta0, family, b, reversed);
  CHECK(std::abs(psi - psi_r) < 1e-12 * std::max(1.0, std::abs(psi)));
}

TEST_CASE("picard: already matched Gaussian is a fixed point") {
  auto family = ExpFamily::monomials(1, 4);
  Eigen::VectorXd theta(4);
  theta << 2.0 / 0.25, -0.5 / 0.25, 0.0, 0.0;  // N(2, 0.25)
  auto b = bij1d(2.0, 0.25, GaussianBijection::Variant::HermiteAffine);
  auto r = apf::picard_update(theta, family, b, gh1d(15));
  CHECK(r.residual < 1e-12);
  CHECK(std::abs(r.bijection.mu[0] - 2.0) < 1e-12);
  CHECK(std::abs(r.bijection.sigma(0, 0) - 0.25) < 1e-12);
}

TEST_CASE("picard contraction from a cold start on a Gaussian target") {
  auto family = ExpFamily::monomials(1, 4);
  Eigen::VectorXd theta(4);
  theta << 8.0, -2.0, 0.0, 0.0;  // N(2, 0.25)
  auto grid = gh1d(15);
  GaussianBijection b = bij1d(0.0, 1.0, GaussianBijection::Variant::HermiteAffine);
  double residual = 1.0;
  for (int it = 0; it < 3; ++it) {
    auto r = apf::picard_update(theta, family, b, grid);
    b = r.bijection;
    residual = r.residual;
  }
  CHECK(residual < 1e-8);
  CHECK(std::abs(b.mu[0] - 2.0) < 1e-10);
  CHECK(std::abs(b.sigma(0, 0) - 0.25) < 1e-10);
}

TEST_CASE("picard fixed point on the quartic family against the dense oracle") {
  auto family = ExpFamily::monomials(1, 4);
  const DenseOracle oracle = dense_oracle(kQuarticTheta0);

  // frozen expectation: Chebyshev-15 settles about 8.5e-4 wide of the oracle
  auto b15 = apf::picard_solve(kQuarticTheta0, family,
                               bij1d(0.0, 1.0, GaussianBijection::Variant::ErfHypercube),
                               gc1d(15));
  CHECK(std::abs(b15.mu[0] - oracle.mean) < 1e-10);
  CHECK(std::abs(b15.sigma(0, 0) - oracle.var) < 1.5e-3);

  // 31 nodes land within the 1e-4 oracle tolerance
  auto b31 = apf::picard_solve(kQuarticTheta0, family,
                               bij1d(0.0, 1.0, GaussianBijection::Variant::ErfHypercube),
                               gc1d(31));
  CHECK(std::abs(b31.sigma(0, 0) - oracle.var) < 1e-4);
}

TEST_CASE("moment matching reads the Gaussian parameters from eta") {
  auto family = ExpFamily::monomials(1, 2);
  Eigen::VectorXd eta(2);
  eta << 0.0, 1.0;
  auto [mu, sigma] = apf::moment_match_from_family(eta, family);
  CHECK(mu[0] == 0.0);
  CHECK(sigma(0, 0) == 1.0);
}

TEST_CASE("grid/bijection domain compatibility is enforced") {
  auto family = ExpFamily::monomials(1, 2);
  Eigen::VectorXd theta(2);
  theta << 0.0, -0.5;
  auto gh = gh1d(7);
  auto gc = gc1d(7);
  CHECK_THROWS_AS(
      apf::log_partition(theta, family,
                         bij1d(0, 1, GaussianBijection::Variant::ErfHypercube), gh),
      std::invalid_argument);
  CHECK_THROWS_AS(
      apf::log_partition(theta, family,
                         bij1d(0, 1, GaussianBijection::Variant::HermiteAffine), gc),
      std::invalid_argument);
  CHECK_THROWS_AS(apf::log_partition(theta, family, StaticBijection{}, gh),
                  std::invalid_argument);
}

TEST_CASE("fisher solver: full solve, noise truncation, indefinite failure") {
  Eigen::MatrixXd ok(2, 2);
  ok << 2, 0.5, 0.5, 3;
  apf::FisherSolver full(ok);
  CHECK(full.truncated_directions() == 0);
  Eigen::VectorXd rhs(2);
  rhs << 1.0, -2.0;
  CHECK((ok * full.solve(rhs) - rhs).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::MatrixXd singular(2, 2);
  singular << 1, 1, 1, 1;  // PSD, rank 1: the null direction is dropped
  apf::FisherSolver trunc(singular);
  CHECK(trunc.truncated_directions() == 1);
  Eigen::VectorXd in_range(2);
  in_range << 1.0, 1.0;
  CHECK((singular * trunc.solve(in_range) - in_range).cwiseAbs().maxCoeff() < 1e-12);

  Eigen::MatrixXd indef(2, 2);
  indef << 1, 0, 0, -1;
  CHECK_THROWS_AS(apf::FisherSolver(indef), apf::FisherNotPositiveDefinite);
}
