#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "apf/bijection.hpp"

using apf::GaussianBijection;
using apf::StaticBijection;

TEST_CASE("erf_inv at zero and the known erf(1) value") {
  CHECK(apf::erf_inv(0.0) == 0.0);
  CHECK(std::abs(apf::erf(1.0) - 0.84270079294971487) < 1e-15);
}

TEST_CASE("erf round-trip below 1e-13 on a dense sweep") {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double y = -0.999 + 1.998 * i / 999.0;
    const double z = apf::erf_inv(y);
    worst = std::max(worst, std::abs(std::erf(z) - y));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("erf_inv rejects the boundary") {
  CHECK_THROWS_AS(apf::erf_inv(1.0), std::domain_error);
  CHECK_THROWS_AS(apf::erf_inv(-1.0), std::domain_error);
}

TEST_CASE("sym_eigen on identity and a known 2x2") {
  auto [t1, l1] = apf::sym_eigen(Eigen::MatrixXd::Identity(3, 3));
  CHECK(l1.isApprox(Eigen::VectorXd::Ones(3)));
  CHECK((t1.transpose() * t1).isApprox(Eigen::MatrixXd::Identity(3, 3), 1e-12));

  Eigen::MatrixXd s(2, 2);
  s << 2, 1, 1, 2;
  auto [t2, l2] = apf::sym_eigen(s);
  CHECK(l2[0] == Catch::Approx(1.0));
  CHECK(l2[1] == Catch::Approx(3.0));
  CHECK((t2.transpose() * l2.asDiagonal() * t2).isApprox(s, 1e-12));
}

TEST_CASE("sym_eigen reconstructs random SPD matrices to 1e-10") {
  std::mt19937 rng(99);
  std::normal_distribution<double> n01;
  for (int d = 2; d <= 4; ++d) {
    for (int rep = 0; rep < 20; ++rep) {
      Eigen::MatrixXd b(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) b(i, j) = n01(rng);
      Eigen::MatrixXd spd = b * b.transpose() + 0.1 * Eigen::MatrixXd::Identity(d, d);
      auto [t, l] = apf::sym_eigen(spd);
      CHECK((t.transpose() * l.asDiagonal() * t - spd).cwiseAbs().maxCoeff() < 1e-10);
      CHECK((t * t.transpose() - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() <
            1e-12);
      // ascending eigenvalues, positive dominant entries
      for (int i = 1; i < d; ++i) CHECK(l[i] >= l[i - 1]);
      for (int j = 0; j < d; ++j) {
        int imax = 0;
        t.row(j).cwiseAbs().maxCoeff(&imax);
        CHECK(t(j, imax) > 0.0);
      }
    }
  }
}

TEST_CASE("forward maps the center to the mean") {
  for (auto variant : {GaussianBijection::Variant::ErfHypercube,
                       GaussianBijection::Variant::HermiteAffine}) {
    auto b = apf::make_gaussian_bijection(Eigen::VectorXd::Zero(2),
                                          Eigen::MatrixXd::Identity(2, 2), variant);
    auto r = apf::forward(b, Eigen::VectorXd::Zero(2));
    CHECK(r.x.cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("erf bijection inverts the unit point") {
  auto b = apf::make_gaussian_bijection(Eigen::VectorXd::Zero(1),
                                        Eigen::MatrixXd::Identity(1, 1),
                                        GaussianBijection::Variant::ErfHypercube);
  Eigen::VectorXd xt(1);
  xt << std::erf(1.0 / std::numbers::sqrt2);
  auto r = apf::forward(b, xt);
  CHECK(r.x[0] == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("affine log determinant in closed form") {
  Eigen::VectorXd mu(2);
  mu << 1.0, -1.0;
  Eigen::MatrixXd sigma = Eigen::Vector2d(4.0, 1.0).asDiagonal();
  auto b = apf::make_gaussian_bijection(mu, sigma,
                                        GaussianBijection::Variant::HermiteAffine);
  auto r = apf::forward(b, Eigen::VectorXd::Zero(2));
  CHECK(r.log_abs_det == Catch::Approx(std::log(4.0)));
}

TEST_CASE("erf bijection Jacobian determinant equals 1/(2^d q)") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  Eigen::VectorXd mu(2);
  mu << 0.4, -0.2;
  Eigen::MatrixXd sigma(2, 2);
  sigma << 1.5, 0.4, 0.4, 0.8;
  auto b = apf::make_gaussian_bijection(mu, sigma, GaussianBijection::Variant::ErfHypercube);
  const double h = 1e-6;
  for (int rep = 0; rep < 50; ++rep) {
    Eigen::VectorXd xt(2);
    xt << u(rng), u(rng);
    auto r = apf::forward(b, xt);
    // finite-difference Jacobian
    Eigen::MatrixXd jac(2, 2);
    for (int k = 0; k < 2; ++k) {
      Eigen::VectorXd xp = xt, xm = xt;
      xp[k] += h;
      xm[k] -= h;
      jac.col(k) = (apf::forward(b, xp).x - apf::forward(b, xm).x) / (2 * h);
    }
    const double fd_det = std::abs(jac.determinant());
    const double analytic = 1.0 / (4.0 * apf::gaussian_density(b, r.x));
    CHECK(std::abs(fd_det - analytic) / analytic < 1e-6);
    CHECK(std::abs(std::exp(r.log_abs_det) - analytic) / analytic < 1e-10);
  }
}

TEST_CASE("bijectivity round-trip and density identity") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-0.95, 0.95);
  Eigen::VectorXd mu(2);
  mu << -1.0, 2.0;
  Eigen::MatrixXd sigma(2, 2);
  sigma << 2.0, -0.6, -0.6, 1.1;
  auto b = apf::make_gaussian_bijection(mu, sigma, GaussianBijection::Variant::ErfHypercube);
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::VectorXd xt(2);
    xt << u(rng), u(rng);
    auto r = apf::forward(b, xt);
    Eigen::VectorXd back = apf::inverse_erf_bijection(b, r.x);
    CHECK((back - xt).cwiseAbs().maxCoeff() < 1e-10);
    // 2^d q(phi(x~)) |det dphi/dx~| = 1
    const double prod = 4.0 * apf::gaussian_density(b, r.x) * std::exp(r.log_abs_det);
    CHECK(std::abs(prod - 1.0) < 1e-10);
  }
}

TEST_CASE("static bijection is atanh with the matching determinant") {
  StaticBijection s;
  Eigen::VectorXd xt(2);
  xt << 0.5, -0.25;
  auto r = apf::forward(s, xt);
  CHECK(r.x[0] == Catch::Approx(std::atanh(0.5)));
  CHECK(r.x[1] == Catch::Approx(std::atanh(-0.25)));
  CHECK(r.log_abs_det ==
        Catch::Approx(-std::log(1 - 0.25) - std::log(1 - 0.0625)));
  Eigen::VectorXd bad(2);
  bad << 1.0, 0.0;
  CHECK_THROWS_AS(apf::forward(s, bad), std::domain_error);
}

TEST_CASE("eigenvalue floor prevents degenerate bijections") {
  Eigen::MatrixXd sigma = Eigen::Vector2d(1.0, 0.0).asDiagonal();
  auto b = apf::make_gaussian_bijection(Eigen::VectorXd::Zero(2), sigma,
                                        GaussianBijection::Variant::HermiteAffine);
  CHECK(b.lambda_diag.minCoeff() >= apf::kEigenvalueFloor);
  CHECK(b.lambda_diag.maxCoeff() == Catch::Approx(1.0));
}
