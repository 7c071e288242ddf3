#pragma once

// Bijections from the quadrature domain to the state space: the static
// atanh map, the erf-based Gaussian map on the hypercube, and the affine
// Gaussian map for Hermite grids.  Includes the special functions and the
// symmetric eigendecomposition they are built from.

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <variant>

namespace apf {

inline double erf(double x) { return std::erf(x); }

// Inverse error function: crude closed-form initial guess refined by Newton
// steps against std::erf.  Round-trip |erf(erf_inv(y)) - y| < 1e-13 on (-1,1).
inline double erf_inv(double y) {
  if (!(y > -1.0 && y < 1.0))
    throw std::domain_error("erf_inv: argument must lie in (-1,1)");
  if (y == 0.0) return 0.0;
  constexpr double a = 0.147;
  const double l = std::log1p(-y * y);
  const double t = 2.0 / (std::numbers::pi * a) + 0.5 * l;
  double z = std::sqrt(std::sqrt(t * t - l / a) - t);
  z = std::copysign(z, y);
  constexpr double half_sqrt_pi = 0.8862269254527580;  // sqrt(pi)/2
  for (int it = 0; it < 4; ++it) {
    const double err = std::erf(z) - y;
    z -= err * half_sqrt_pi * std::exp(z * z);
  }
  return z;
}

// Eigendecomposition of a symmetric matrix in the convention
// sigma = T^T diag(lambda) T with T unitary (rows are eigenvectors).
// Eigenvalues ascend; each eigenvector's largest-magnitude entry is positive.
inline std::pair<Eigen::MatrixXd, Eigen::VectorXd> sym_eigen(const Eigen::MatrixXd& sigma) {
  if (sigma.rows() != sigma.cols())
    throw std::invalid_argument("sym_eigen: matrix must be square");
  const Eigen::MatrixXd s = 0.5 * (sigma + sigma.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("sym_eigen: iteration failed to converge");
  Eigen::MatrixXd v = es.eigenvectors();
  for (int j = 0; j < v.cols(); ++j) {
    int imax = 0;
    v.col(j).cwiseAbs().maxCoeff(&imax);
    if (v(imax, j) < 0.0) v.col(j) = -v.col(j);
  }
  return {v.transpose(), es.eigenvalues()};
}

// phi(x~) = atanh(x~) componentwise, |det dphi/dx~| = prod (1 - x~_i^2)^{-1}.
struct StaticBijection {};

struct GaussianBijection {
  enum class Variant { ErfHypercube, HermiteAffine };

  Variant variant = Variant::ErfHypercube;
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;        // SPD after eigenvalue flooring
  Eigen::MatrixXd t_rot;        // unitary, sigma = t_rot^T diag(lambda) t_rot
  Eigen::VectorXd lambda_diag;  // ascending positive eigenvalues

  int dim() const { return static_cast<int>(mu.size()); }
};

// Relative eigenvalue floor applied when (mu, sigma) are turned into a
// bijection; prevents collapse when the matched covariance shrinks.
constexpr double kEigenvalueFloor = 1e-12;

inline GaussianBijection make_gaussian_bijection(const Eigen::VectorXd& mu,
                                                 const Eigen::MatrixXd& sigma,
                                                 GaussianBijection::Variant variant) {
  if (sigma.rows() != mu.size() || sigma.cols() != mu.size())
    throw std::invalid_argument("make_gaussian_bijection: dimension mismatch");
  GaussianBijection b;
  b.variant = variant;
  b.mu = mu;
  auto [t, lam] = sym_eigen(sigma);
  const double floor = kEigenvalueFloor * std::max(lam.maxCoeff(), kEigenvalueFloor);
  bool all_floored = true;
  for (int i = 0; i < lam.size(); ++i) {
    if (lam[i] > floor) all_floored = false;
    lam[i] = std::max(lam[i], floor);
  }
  if (all_floored && sigma.norm() > 0.0 && lam.maxCoeff() <= kEigenvalueFloor)
    throw std::runtime_error("make_gaussian_bijection: covariance collapsed to floor");
  b.t_rot = t;
  b.lambda_diag = lam;
  b.sigma = t.transpose() * lam.asDiagonal() * t;
  return b;
}

using Bijection = std::variant<StaticBijection, GaussianBijection>;

struct ForwardResult {
  Eigen::VectorXd x;
  double log_abs_det;
};

// Map a quadrature-domain point to the state space with the log Jacobian
// determinant.  ErfHypercube: x = mu + sqrt(2) T^{-1} Lambda^{1/2} erfinv(x~),
// |det| = 1/(2^d q_xi(x)).  HermiteAffine: same with x~ in place of
// erfinv(x~), |det| = 2^{d/2} prod lambda_i^{1/2}.
inline ForwardResult forward(const GaussianBijection& b, const Eigen::VectorXd& x_tilde) {
  const int d = b.dim();
  if (x_tilde.size() != d)
    throw std::invalid_argument("forward: point dimension mismatch");
  Eigen::VectorXd z(d);
  double log_det = 0.0;
  constexpr double log_half_sqrt_pi = -0.1207822376352453;  // log(sqrt(pi)/2)
  if (b.variant == GaussianBijection::Variant::ErfHypercube) {
    for (int i = 0; i < d; ++i) {
      if (!(std::abs(x_tilde[i]) < 1.0))
        throw std::domain_error("forward: hypercube point outside (-1,1)");
      z[i] = erf_inv(x_tilde[i]);
      log_det += log_half_sqrt_pi + z[i] * z[i];
    }
  } else {
    z = x_tilde;
  }
  for (int i = 0; i < d; ++i)
    log_det += 0.5 * std::log(2.0 * b.lambda_diag[i]);
  ForwardResult out;
  out.x = b.mu + std::numbers::sqrt2 *
                     (b.t_rot.transpose() * b.lambda_diag.cwiseSqrt().asDiagonal() * z);
  out.log_abs_det = log_det;
  return out;
}

inline ForwardResult forward(const StaticBijection&, const Eigen::VectorXd& x_tilde) {
  const int d = static_cast<int>(x_tilde.size());
  ForwardResult out;
  out.x.resize(d);
  out.log_abs_det = 0.0;
  for (int i = 0; i < d; ++i) {
    if (!(std::abs(x_tilde[i]) < 1.0))
      throw std::domain_error("forward: hypercube point outside (-1,1)");
    out.x[i] = std::atanh(x_tilde[i]);
    out.log_abs_det -= std::log1p(-x_tilde[i] * x_tilde[i]);
  }
  return out;
}

inline ForwardResult forward(const Bijection& b, const Eigen::VectorXd& x_tilde) {
  return std::visit([&](const auto& bb) { return forward(bb, x_tilde); }, b);
}

// Inverse map zeta_xi (ErfHypercube): erf(Lambda^{-1/2} (T x - T mu)/sqrt(2)).
inline Eigen::VectorXd inverse_erf_bijection(const GaussianBijection& b,
                                             const Eigen::VectorXd& x) {
  if (b.variant != GaussianBijection::Variant::ErfHypercube)
    throw std::invalid_argument("inverse_erf_bijection: wrong variant");
  Eigen::VectorXd z = b.lambda_diag.cwiseSqrt().cwiseInverse().asDiagonal() *
                      (b.t_rot * (x - b.mu)) / std::numbers::sqrt2;
  for (int i = 0; i < z.size(); ++i) z[i] = std::erf(z[i]);
  return z;
}

// Gaussian density q_xi(x) for the bijection parameters.
inline double gaussian_density(const GaussianBijection& b, const Eigen::VectorXd& x) {
  const int d = b.dim();
  const Eigen::VectorXd y = b.t_rot * (x - b.mu);
  double quad = 0.0;
  double log_det_sigma = 0.0;
  for (int i = 0; i < d; ++i) {
    quad += y[i] * y[i] / b.lambda_diag[i];
    log_det_sigma += std::log(b.lambda_diag[i]);
  }
  return std::exp(-0.5 * quad - 0.5 * log_det_sigma - 0.5 * d * std::log(2.0 * std::numbers::pi));
}

}  // namespace apf
