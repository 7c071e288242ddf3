#pragma once

// Second-order forward-mode automatic differentiation on dense jets.  A Jet2
// carries value, gradient and Hessian with respect to the m seed variables.
// An empty (0x0) Hessian stands for a structurally zero matrix; seeds start
// that way, so purely affine expressions never pay the m^2 storage until a
// nonlinear op materializes it.

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace apf {

struct Jet2 {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;  // empty means zero

  Jet2() = default;
  explicit Jet2(int m) : grad(Eigen::VectorXd::Zero(m)) {}
  Jet2(double v, Eigen::VectorXd g) : value(v), grad(std::move(g)) {}
  Jet2(double v, Eigen::VectorXd g, Eigen::MatrixXd h)
      : value(v), grad(std::move(g)), hess(std::move(h)) {}

  int vars() const { return static_cast<int>(grad.size()); }
  bool hess_is_zero() const { return hess.size() == 0; }

  Eigen::MatrixXd dense_hess() const {
    if (hess_is_zero()) return Eigen::MatrixXd::Zero(vars(), vars());
    return hess;
  }

  Jet2& add_scaled(const Jet2& o, double s) {
    value += s * o.value;
    grad += s * o.grad;
    if (!o.hess_is_zero()) {
      if (hess_is_zero()) hess = Eigen::MatrixXd::Zero(vars(), vars());
      hess += s * o.hess;
    }
    return *this;
  }
};

namespace jet {

// Seed jets for the canonical lift: component i has value point[i], unit
// gradient e_i and zero Hessian.
inline std::vector<Jet2> lift(const Eigen::VectorXd& point) {
  const int m = static_cast<int>(point.size());
  for (int i = 0; i < m; ++i)
    if (!std::isfinite(point[i])) throw std::invalid_argument("lift: non-finite entry");
  std::vector<Jet2> seeds;
  seeds.reserve(m);
  for (int i = 0; i < m; ++i) {
    Jet2 j(m);
    j.value = point[i];
    j.grad[i] = 1.0;
    seeds.push_back(std::move(j));
  }
  return seeds;
}

inline Jet2 constant(int m, double v) { return Jet2(v, Eigen::VectorXd::Zero(m)); }

inline Jet2 add(const Jet2& a, const Jet2& b) {
  Jet2 out(a.value + b.value, a.grad + b.grad);
  if (!a.hess_is_zero() || !b.hess_is_zero()) out.hess = a.dense_hess() + b.dense_hess();
  return out;
}

inline Jet2 add(const Jet2& a, double c) { return Jet2(a.value + c, a.grad, a.hess); }

inline Jet2 sub(const Jet2& a, const Jet2& b) {
  Jet2 out(a.value - b.value, a.grad - b.grad);
  if (!a.hess_is_zero() || !b.hess_is_zero()) out.hess = a.dense_hess() - b.dense_hess();
  return out;
}

inline Jet2 scale(const Jet2& a, double s) {
  Jet2 out(s * a.value, s * a.grad);
  if (!a.hess_is_zero()) out.hess = s * a.hess;
  return out;
}

inline Jet2 mul(const Jet2& a, const Jet2& b) {
  Jet2 out(a.value * b.value, a.value * b.grad + b.value * a.grad);
  out.hess = a.grad * b.grad.transpose() + b.grad * a.grad.transpose();
  if (!a.hess_is_zero()) out.hess += b.value * a.hess;
  if (!b.hess_is_zero()) out.hess += a.value * b.hess;
  return out;
}

// sum_j coeffs[j] * jets[j] + c0; affine combinations of seeds keep the
// structural zero Hessian.
inline Jet2 affine(const std::vector<Jet2>& jets, const Eigen::VectorXd& coeffs,
                   double c0 = 0.0) {
  if (jets.empty()) throw std::invalid_argument("affine: no jets");
  if (static_cast<int>(jets.size()) != coeffs.size())
    throw std::invalid_argument("affine: coefficient count mismatch");
  const int m = jets[0].vars();
  Jet2 out(c0, Eigen::VectorXd::Zero(m));
  bool any_h = false;
  for (std::size_t j = 0; j < jets.size(); ++j) any_h = any_h || !jets[j].hess_is_zero();
  if (any_h) out.hess = Eigen::MatrixXd::Zero(m, m);
  for (std::size_t j = 0; j < jets.size(); ++j) {
    const double c = coeffs[static_cast<int>(j)];
    if (c == 0.0) continue;
    out.value += c * jets[j].value;
    out.grad += c * jets[j].grad;
    if (!jets[j].hess_is_zero()) out.hess += c * jets[j].hess;
  }
  return out;
}

inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value);
  Jet2 out(e, e * a.grad);
  out.hess = e * (a.grad * a.grad.transpose());
  if (!a.hess_is_zero()) out.hess += e * a.hess;
  return out;
}

inline Jet2 log(const Jet2& a) {
  if (!(a.value > 0.0)) throw std::domain_error("jet log: non-positive value");
  Jet2 out(std::log(a.value), a.grad / a.value);
  out.hess = -(a.grad * a.grad.transpose()) / (a.value * a.value);
  if (!a.hess_is_zero()) out.hess += a.hess / a.value;
  return out;
}

inline Jet2 inv(const Jet2& a) {
  if (a.value == 0.0) throw std::domain_error("jet inv: zero value");
  const double iv = 1.0 / a.value;
  Jet2 out(iv, -iv * iv * a.grad);
  out.hess = 2.0 * iv * iv * iv * (a.grad * a.grad.transpose());
  if (!a.hess_is_zero()) out.hess -= iv * iv * a.hess;
  return out;
}

inline Jet2 div(const Jet2& a, const Jet2& b) { return mul(a, inv(b)); }

// Evaluate func on the canonical lift of point; returns value, gradient and
// the symmetrized dense Hessian.
template <typename F>
Jet2 hessian_of(F&& func, const Eigen::VectorXd& point) {
  Jet2 out = func(lift(point));
  Eigen::MatrixXd h = out.dense_hess();
  out.hess = 0.5 * (h + h.transpose());
  return out;
}

}  // namespace jet
}  // namespace apf
