#pragma once

// Kalman-Bucy reference filter for linear models dx = A x dt + rho dW,
// dy = H x dt + dV; Euler time stepping, exact oracle for acceptance tests.

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace apf {

struct KalmanBucyResult {
  Eigen::MatrixXd means;               // (steps+1) x d, row k at t_k
  std::vector<Eigen::MatrixXd> covs;   // steps+1 entries
};

inline KalmanBucyResult kalman_bucy(const Eigen::MatrixXd& a, const Eigen::MatrixXd& h,
                                    const Eigen::MatrixXd& rho_q_rho_t,
                                    const Eigen::VectorXd& m0, const Eigen::MatrixXd& p0,
                                    double dt, const Eigen::MatrixXd& dys) {
  const int d = static_cast<int>(a.rows());
  if (a.cols() != d || p0.rows() != d || p0.cols() != d || m0.size() != d)
    throw std::invalid_argument("kalman_bucy: dimension mismatch");
  if (h.cols() != d || dys.cols() != h.rows())
    throw std::invalid_argument("kalman_bucy: observation dimension mismatch");
  const int steps = static_cast<int>(dys.rows());

  KalmanBucyResult out;
  out.means.resize(steps + 1, d);
  out.covs.reserve(steps + 1);
  Eigen::VectorXd m = m0;
  Eigen::MatrixXd p = p0;
  out.means.row(0) = m.transpose();
  out.covs.push_back(p);
  for (int k = 0; k < steps; ++k) {
    const Eigen::VectorXd innov = dys.row(k).transpose() - h * m * dt;
    const Eigen::VectorXd mn = m + a * m * dt + p * h.transpose() * innov;
    const Eigen::MatrixXd pn =
        p + (a * p + p * a.transpose() + rho_q_rho_t - p * h.transpose() * h * p) * dt;
    m = mn;
    p = 0.5 * (pn + pn.transpose());
    out.means.row(k + 1) = m.transpose();
    out.covs.push_back(p);
  }
  return out;
}

}  // namespace apf
