#pragma once

// Exponential-family computations on a bijected quadrature grid: the
// approximated cumulant-generating function psi^(N), its derivatives (moments
// and Fisher metric) via forward-mode jets, the direct quadrature-ratio
// formulas used as a cross-check, and the moment-matching update of the
// Gaussian bijection parameters.

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "apf/autodiff.hpp"
#include "apf/bijection.hpp"
#include "apf/model.hpp"
#include "apf/quadrature.hpp"

namespace apf {

struct FisherNotPositiveDefinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureBreakdown : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CgfResult {
  double psi = 0.0;
  Eigen::VectorXd eta;      // moments of the natural statistics
  Eigen::MatrixXd fisher;   // Hessian of psi^(N), symmetric
  Eigen::VectorXd eta_ext;  // moments of the extended statistics (may be empty)
  Eigen::MatrixXd cov_ext;  // Cov(c, c~): top m rows of the augmented Hessian
};

// Per-node data for one (family, bijection, grid) combination.  Statistics
// are stored centered about their value at the bijection center and scaled
// per column to unit RMS; psi, gradient and Hessian are mapped back to the
// raw statistics on the way out.  Centering keeps the log-sum-exp Gram well
// conditioned when the mean is far from 0; column scaling keeps it well
// conditioned when the statistics live on very different length scales.
struct NodeTable {
  Eigen::MatrixXd stats;      // N x m_ext, centered+scaled values of c~
  Eigen::VectorXd offset;     // m_ext, c~ at the bijection center
  Eigen::VectorXd col_scale;  // m_ext, RMS of each centered column
  Eigen::VectorXd log_mass;   // log|w_i| + log|det_i| - log omega(x~_i)
  Eigen::VectorXd sign;       // sign of w_i
  Eigen::MatrixXd points;     // N x d, bijected nodes
};

inline void check_domains(const Bijection& bij, const QuadratureGrid& grid) {
  const bool hypercube = grid.domain == GridDomain::Hypercube;
  if (std::holds_alternative<StaticBijection>(bij)) {
    if (!hypercube)
      throw std::invalid_argument("static bijection requires a hypercube grid");
    return;
  }
  const auto& g = std::get<GaussianBijection>(bij);
  if (g.variant == GaussianBijection::Variant::ErfHypercube && !hypercube)
    throw std::invalid_argument("erf bijection requires a hypercube grid");
  if (g.variant == GaussianBijection::Variant::HermiteAffine && hypercube)
    throw std::invalid_argument("affine Hermite bijection requires a real-space grid");
}

inline NodeTable make_node_table(const ExpFamily& family, const Bijection& bij,
                                 const QuadratureGrid& grid) {
  check_domains(bij, grid);
  if (grid.dim != family.dim())
    throw std::invalid_argument("make_node_table: grid/family dimension mismatch");
  const int me = family.m_ext();
  const int d = grid.dim;

  Eigen::VectorXd center = Eigen::VectorXd::Zero(d);
  if (const auto* g = std::get_if<GaussianBijection>(&bij)) center = g->mu;

  NodeTable t;
  t.offset.resize(me);
  for (int k = 0; k < me; ++k)
    t.offset[k] = family.extended()[k](std::span<const double>(center.data(), d));

  const int n_all = grid.size();
  t.stats.resize(n_all, me);
  t.log_mass.resize(n_all);
  t.sign.resize(n_all);
  t.points.resize(n_all, d);

  int n = 0;
  Eigen::VectorXd xt(d);
  for (int i = 0; i < n_all; ++i) {
    const double w = grid.weights[i];
    if (w == 0.0) continue;
    xt = grid.nodes.row(i).transpose();
    const ForwardResult fr = forward(bij, xt);
    double lm = std::log(std::abs(w)) + fr.log_abs_det;
    switch (grid.family) {
      case RuleFamily::GaussChebyshev:
        for (int k = 0; k < d; ++k) lm += 0.5 * std::log1p(-xt[k] * xt[k]);
        break;
      case RuleFamily::GaussPatterson:
        break;
      case RuleFamily::GaussHermite:
        lm += xt.squaredNorm();
        break;
    }
    if (!std::isfinite(lm))
      throw QuadratureBreakdown("make_node_table: non-finite node mass");
    for (int k = 0; k < me; ++k) {
      t.stats(n, k) =
          family.extended()[k](std::span<const double>(fr.x.data(), d)) - t.offset[k];
    }
    t.log_mass[n] = lm;
    t.sign[n] = w > 0 ? 1.0 : -1.0;
    t.points.row(n) = fr.x.transpose();
    ++n;
  }
  t.stats.conservativeResize(n, me);
  t.log_mass.conservativeResize(n);
  t.sign.conservativeResize(n);
  t.points.conservativeResize(n, d);
  t.col_scale.resize(me);
  for (int k = 0; k < me; ++k) {
    const double rms = std::sqrt(t.stats.col(k).squaredNorm() / std::max(n, 1));
    t.col_scale[k] = rms > 0.0 ? rms : 1.0;
    t.stats.col(k) /= t.col_scale[k];
  }
  return t;
}

inline Eigen::VectorXd pad_theta(const Eigen::VectorXd& theta, int m_ext) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(m_ext);
  out.head(theta.size()) = theta;
  return out;
}

namespace detail {

// Signed, max-shifted exponent vector; the shared core of every evaluation.
struct NodeExponents {
  Eigen::VectorXd e;  // e_i = theta~^T c_centered(x_i) + log_mass_i
  double shift;
};

inline NodeExponents node_exponents(const Eigen::VectorXd& theta_ext, const NodeTable& t) {
  if (theta_ext.size() != t.stats.cols())
    throw std::invalid_argument("node_exponents: parameter dimension mismatch");
  NodeExponents out;
  out.e = t.stats * t.col_scale.cwiseProduct(theta_ext) + t.log_mass;
  if (!out.e.allFinite())
    throw QuadratureBreakdown("psi evaluation: non-finite integrand at a node");
  out.shift = out.e.maxCoeff();
  return out;
}

}  // namespace detail

// Normalized signed node weights p_i with sum(p) = 1, plus psi^(N).
// p can carry negative entries on sparse grids.
struct NodeDistribution {
  Eigen::VectorXd p;
  double psi;
};

inline NodeDistribution node_distribution(const Eigen::VectorXd& theta_ext,
                                          const NodeTable& t) {
  const auto [e, shift] = detail::node_exponents(theta_ext, t);
  Eigen::VectorXd p = t.sign.cwiseProduct((e.array() - shift).exp().matrix());
  const double s = p.sum();
  if (!(s > 0.0))
    throw QuadratureBreakdown("psi evaluation: quadrature sum not positive");
  NodeDistribution out;
  out.p = p / s;
  out.psi = std::log(s) + shift + t.offset.dot(theta_ext);
  return out;
}

// psi^(N) value, gradient (= moments of the statistics) and Hessian
// (= Fisher metric), computed by one jet pass over the node table.  The
// per-node contribution is exp of an affine function of theta, so its jet
// has the rank-one Hessian exp(e) c c^T; accumulation and the final log are
// ordinary jet operations.
inline Jet2 cgf_jet(const Eigen::VectorXd& theta_ext, const NodeTable& t) {
  const auto [e, shift] = detail::node_exponents(theta_ext, t);
  const int me = static_cast<int>(theta_ext.size());
  const int n = static_cast<int>(e.size());
  Jet2 sum(me);
  sum.hess = Eigen::MatrixXd::Zero(me, me);
  for (int i = 0; i < n; ++i) {
    const double w = t.sign[i] * std::exp(e[i] - shift);
    if (w == 0.0) continue;
    sum.value += w;
    sum.grad.noalias() += w * t.stats.row(i).transpose();
    sum.hess.selfadjointView<Eigen::Lower>().rankUpdate(t.stats.row(i).transpose(), w);
  }
  sum.hess.triangularView<Eigen::StrictlyUpper>() =
      sum.hess.transpose().triangularView<Eigen::StrictlyUpper>();
  if (!(sum.value > 0.0))
    throw QuadratureBreakdown("psi evaluation: quadrature sum not positive");
  Jet2 out = jet::log(sum);
  out.value += shift + t.offset.dot(theta_ext);
  out.grad = t.offset + t.col_scale.cwiseProduct(out.grad);
  out.hess = (t.col_scale.asDiagonal() * (0.5 * (out.hess + out.hess.transpose())) *
              t.col_scale.asDiagonal())
                 .eval();
  return out;
}

// ---------------------------------------------------------------------------
// Spec-level operations on (theta, family, bijection, grid)

inline double log_partition(const Eigen::VectorXd& theta, const ExpFamily& family,
                            const Bijection& bij, const QuadratureGrid& grid) {
  const NodeTable t = make_node_table(family, bij, grid);
  const auto [e, shift] = detail::node_exponents(pad_theta(theta, family.m_ext()), t);
  double s = 0.0;
  for (int i = 0; i < e.size(); ++i) s += t.sign[i] * std::exp(e[i] - shift);
  if (!(s > 0.0))
    throw QuadratureBreakdown("log_partition: quadrature sum not positive");
  return std::log(s) + shift + t.offset.head(theta.size()).dot(theta);
}

// Natural-gradient solver for the Fisher metric.  The matrix is equilibrated
// to unit diagonal (the raw Fisher of degree-4 statistics at small length
// scales spans twenty orders of magnitude), eigendecomposed, and directions
// whose relative eigenvalue sits below the double-precision noise floor are
// truncated out of the solve.  Genuine indefiniteness beyond that floor is a
// quadrature breakdown and throws.
class FisherSolver {
 public:
  // relative eigenvalue floor: directions below carry no usable information
  static constexpr double kTruncation = 1e-9;
  // balanced eigenvalues below -kIndefinite * max are a real failure;
  // smaller negative dips are quadrature noise and are truncated like the
  // positive directions below the floor
  static constexpr double kIndefinite = 1e-2;

  explicit FisherSolver(const Eigen::MatrixXd& fisher) {
    const int m = static_cast<int>(fisher.rows());
    const double dmax = fisher.diagonal().maxCoeff();
    if (!(dmax > 0.0))
      throw FisherNotPositiveDefinite("fisher solve: no positive diagonal entry");
    // a statistic whose quadrature variance came out non-positive carries no
    // usable information at this state; exclude it from the solve entirely
    scale_.resize(m);
    for (int i = 0; i < m; ++i) {
      if (fisher(i, i) > 0.0) {
        scale_[i] = 1.0 / std::sqrt(fisher(i, i));
      } else {
        scale_[i] = 0.0;
        ++truncated_;
      }
    }
    Eigen::MatrixXd balanced = scale_.asDiagonal() * fisher * scale_.asDiagonal();
    for (int i = 0; i < m; ++i)
      if (scale_[i] == 0.0) balanced(i, i) = 1.0;  // isolated unit row/column
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(balanced);
    if (es.info() != Eigen::Success)
      throw FisherNotPositiveDefinite("fisher solve: eigendecomposition failed");
    const double lam_max = es.eigenvalues().maxCoeff();
    if (!(lam_max > 0.0))
      throw FisherNotPositiveDefinite("fisher solve: no positive eigenvalue");
    if (es.eigenvalues().minCoeff() < -kIndefinite * lam_max)
      throw FisherNotPositiveDefinite(
          "fisher solve: matrix indefinite beyond the noise floor");
    vecs_ = es.eigenvectors();
    inv_ = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < m; ++i) {
      if (es.eigenvalues()[i] >= kTruncation * lam_max)
        inv_[i] = 1.0 / es.eigenvalues()[i];
      else
        ++truncated_;
    }
  }

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const {
    const Eigen::VectorXd b = scale_.asDiagonal() * rhs;
    return scale_.asDiagonal() *
           (vecs_ * inv_.cwiseProduct(vecs_.transpose() * b)).eval();
  }

  // number of directions dropped from the solve
  int truncated_directions() const { return truncated_; }

 private:
  Eigen::VectorXd scale_;
  Eigen::MatrixXd vecs_;
  Eigen::VectorXd inv_;
  int truncated_ = 0;
};

// psi, eta = grad psi^(N), fisher = hess psi^(N) for the base statistics.
inline CgfResult moments_and_fisher(const Eigen::VectorXd& theta, const ExpFamily& family,
                                    const Bijection& bij, const QuadratureGrid& grid) {
  const NodeTable t = make_node_table(family, bij, grid);
  const Jet2 full = cgf_jet(pad_theta(theta, family.m_ext()), t);
  const int m = family.m();
  CgfResult out;
  out.psi = full.value;
  out.eta = full.grad.head(m);
  out.fisher = full.hess.topLeftCorner(m, m);
  FisherSolver pd_check(out.fisher);  // PD contract up to the noise floor
  (void)pd_check;
  return out;
}

// One augmented pass giving psi, eta~, eta and the Fisher block; the filter's
// per-step workhorse.
inline CgfResult cgf_full(const Eigen::VectorXd& theta, const ExpFamily& family,
                          const NodeTable& t) {
  const Jet2 full = cgf_jet(pad_theta(theta, family.m_ext()), t);
  const int m = family.m();
  CgfResult out;
  out.psi = full.value;
  out.eta_ext = full.grad;
  out.eta = full.grad.head(m);
  out.fisher = full.hess.topLeftCorner(m, m);
  out.cov_ext = full.hess.topRows(m);
  return out;
}

// Moments of the extended statistics via the augmented log-partition gradient
// at (theta, 0).
inline Eigen::VectorXd extended_expectations(const Eigen::VectorXd& theta,
                                             const ExpFamily& family, const Bijection& bij,
                                             const QuadratureGrid& grid) {
  const NodeTable t = make_node_table(family, bij, grid);
  return cgf_full(theta, family, t).eta_ext;
}

// Self-normalized expectation of an arbitrary function of the state under the
// quadrature measure (part 4 of the numerical-expectation identities).
template <typename F>
double expectation_ratio_fn(F&& f, const Eigen::VectorXd& theta, const ExpFamily& family,
                            const NodeTable& t) {
  const NodeDistribution nd = node_distribution(pad_theta(theta, family.m_ext()), t);
  double acc = 0.0;
  for (int i = 0; i < nd.p.size(); ++i) {
    const Eigen::VectorXd x = t.points.row(i).transpose();
    acc += nd.p[i] * f(x);
  }
  return acc;
}

inline double expectation_ratio(const SparsePolynomial& f, const Eigen::VectorXd& theta,
                                const ExpFamily& family, const Bijection& bij,
                                const QuadratureGrid& grid) {
  const NodeTable t = make_node_table(family, bij, grid);
  return expectation_ratio_fn(
      [&](const Eigen::VectorXd& x) {
        return f(std::span<const double>(x.data(), x.size()));
      },
      theta, family, t);
}

// Direct ratio formulas for gradient and Hessian of psi^(N) (parts 2 and 3 of
// the numerical-expectation identities); the independent cross-check of the
// jet route.
inline CgfResult ratio_moments(const Eigen::VectorXd& theta, const ExpFamily& family,
                               const Bijection& bij, const QuadratureGrid& grid) {
  const NodeTable t = make_node_table(family, bij, grid);
  const NodeDistribution nd = node_distribution(pad_theta(theta, family.m_ext()), t);
  const int m = family.m();
  CgfResult out;
  out.psi = nd.psi;
  Eigen::VectorXd eta_scaled = t.stats.transpose() * nd.p;
  out.eta_ext = t.offset + t.col_scale.cwiseProduct(eta_scaled);
  out.eta = out.eta_ext.head(m);
  Eigen::MatrixXd second = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < nd.p.size(); ++i)
    second.selfadjointView<Eigen::Lower>().rankUpdate(
        t.stats.row(i).head(m).transpose(), nd.p[i]);
  second.triangularView<Eigen::StrictlyUpper>() =
      second.transpose().triangularView<Eigen::StrictlyUpper>();
  const Eigen::MatrixXd corr =
      second - eta_scaled.head(m) * eta_scaled.head(m).transpose();
  out.fisher = t.col_scale.head(m).asDiagonal() * corr * t.col_scale.head(m).asDiagonal();
  return out;
}

// Integration-error diagnostic E_N[1; xi] = 1 - exp(psi^(N) - psi_ref).
inline double normalization_defect(const Eigen::VectorXd& theta, const ExpFamily& family,
                                   const Bijection& bij, const QuadratureGrid& grid,
                                   double psi_ref) {
  return 1.0 - std::exp(log_partition(theta, family, bij, grid) - psi_ref);
}

// Gradient of E_N[1; xi]^2 with respect to xi = (mu, sigma^2) for the 1-D erf
// bijection, via the closed form -2 E_N[1;xi] E_{theta,N}[(1/u) du/dxi; xi].
// For x = mu + sqrt(2 s2) erfinv(x~):
//   dlogU/dmu = theta^T c'(x)
//   dlogU/ds2 = theta^T c'(x) (x - mu)/(2 s2) + 1/(2 s2).
inline Eigen::Vector2d defect_sq_gradient_1d(const Eigen::VectorXd& theta,
                                             const ExpFamily& family,
                                             const GaussianBijection& bij,
                                             const QuadratureGrid& grid, double psi_ref) {
  if (family.dim() != 1 || bij.dim() != 1 ||
      bij.variant != GaussianBijection::Variant::ErfHypercube)
    throw std::invalid_argument("defect_sq_gradient_1d: requires 1-D erf bijection");
  const double mu = bij.mu[0];
  const double s2 = bij.sigma(0, 0);
  std::vector<SparsePolynomial> dstats;
  for (const auto& s : family.stats()) dstats.push_back(s.differentiate(0));

  const NodeTable t = make_node_table(family, Bijection(bij), grid);
  const NodeDistribution nd = node_distribution(pad_theta(theta, family.m_ext()), t);
  const double e_theta_n_1 = std::exp(nd.psi - psi_ref);  // E_{theta,N}[1; xi]
  const double defect = 1.0 - e_theta_n_1;

  double r_mu = 0.0, r_s2 = 0.0;
  for (int i = 0; i < nd.p.size(); ++i) {
    const double x = t.points(i, 0);
    double tc = 0.0;
    for (int k = 0; k < family.m(); ++k)
      tc += theta[k] * dstats[k]({x});
    r_mu += nd.p[i] * tc;
    r_s2 += nd.p[i] * (tc * (x - mu) / (2.0 * s2) + 1.0 / (2.0 * s2));
  }
  Eigen::Vector2d grad;
  grad[0] = -2.0 * defect * e_theta_n_1 * r_mu;
  grad[1] = -2.0 * defect * e_theta_n_1 * r_s2;
  return grad;
}

// ---------------------------------------------------------------------------
// Moment matching and the Picard update of the bijection parameters

// Read mean and covariance from the extended moments; requires the family's
// c~ to contain all first- and second-order monomials.
inline std::pair<Eigen::VectorXd, Eigen::MatrixXd> moment_match_from_family(
    const Eigen::VectorXd& eta_ext, const ExpFamily& family) {
  const int d = family.dim();
  Eigen::VectorXd mu(d);
  Eigen::MatrixXd sigma(d, d);
  auto entry = [&](const MultiIndex& idx) {
    auto hit = family.find_monomial(idx);
    if (!hit)
      throw std::invalid_argument("moment_match_from_family: missing monomial " +
                                  detail::monomial_name(idx));
    return eta_ext[hit->first] / hit->second;
  };
  for (int i = 0; i < d; ++i) {
    MultiIndex idx(d, 0);
    idx[i] = 1;
    mu[i] = entry(idx);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      MultiIndex idx(d, 0);
      idx[i] += 1;
      idx[j] += 1;
      const double second = entry(idx);
      sigma(i, j) = sigma(j, i) = second - mu[i] * mu[j];
    }
  return {mu, sigma};
}

struct PicardResult {
  GaussianBijection bijection;
  double residual = std::numeric_limits<double>::infinity();
};

// One step of the approximated moment-matching iteration: moments under
// bij_in, matched Gaussian parameters out.  Residual is
// max(|d mu|_inf, |d Sigma|_inf / trace(Sigma_new)).
inline PicardResult picard_update(const Eigen::VectorXd& theta, const ExpFamily& family,
                                  const GaussianBijection& bij_in,
                                  const QuadratureGrid& grid) {
  const Eigen::VectorXd eta_ext = extended_expectations(theta, family, Bijection(bij_in), grid);
  const auto [mu, sigma] = moment_match_from_family(eta_ext, family);
  PicardResult out{make_gaussian_bijection(mu, sigma, bij_in.variant), 0.0};
  const double dmu = (mu - bij_in.mu).cwiseAbs().maxCoeff();
  const double dsig = (out.bijection.sigma - bij_in.sigma).cwiseAbs().maxCoeff();
  out.residual = std::max(dmu, dsig / out.bijection.sigma.trace());
  return out;
}

// Standalone fixed-point solve used to initialize the bijection; tolerance
// and iteration cap are module defaults.
inline GaussianBijection picard_solve(const Eigen::VectorXd& theta, const ExpFamily& family,
                                      GaussianBijection bij, const QuadratureGrid& grid,
                                      double tol = 1e-8, int max_iter = 100) {
  for (int it = 0; it < max_iter; ++it) {
    PicardResult r = picard_update(theta, family, bij, grid);
    bij = std::move(r.bijection);
    if (r.residual < tol) return bij;
  }
  throw std::runtime_error("picard_solve: no convergence within iteration cap");
}

}  // namespace apf
