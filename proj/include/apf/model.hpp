#pragma once

// Exponential-family description, state-space model specification, and the
// symbolic preprocessing that expresses the filter dynamics through constant
// coefficient data (a0, A0, b0, b_h, lambda).

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "apf/polynomial.hpp"

namespace apf {

// Natural statistics c and extended statistics c~ = [c; c_h].  The extension
// entries are always unit monomials; the base statistics must be single-term
// polynomials (monomials up to scale), which covers every family used here.
class ExpFamily {
 public:
  explicit ExpFamily(std::vector<SparsePolynomial> stats)
      : stats_(std::move(stats)) {
    if (stats_.empty()) throw std::invalid_argument("ExpFamily: no statistics");
    dim_ = stats_[0].dim();
    for (const auto& s : stats_) {
      if (s.dim() != dim_) throw std::invalid_argument("ExpFamily: mixed dimensions");
      if (s.is_zero()) throw std::invalid_argument("ExpFamily: zero statistic");
    }
    extended_ = stats_;
    rebuild_lookup();
  }

  // All unit monomials x^alpha with 1 <= |alpha| <= max_degree, graded lex.
  static ExpFamily monomials(int dim, int max_degree) {
    std::vector<SparsePolynomial> stats;
    for (const MultiIndex& idx : monomial_indices(dim, 1, max_degree))
      stats.push_back(SparsePolynomial::monomial(idx));
    return ExpFamily(std::move(stats));
  }

  static std::vector<MultiIndex> monomial_indices(int dim, int min_degree, int max_degree) {
    std::vector<MultiIndex> out;
    MultiIndex idx(dim, 0);
    auto rec = [&](auto&& self, int axis, int remaining) -> void {
      if (axis == dim - 1) {
        idx[axis] = remaining;
        out.push_back(idx);
        return;
      }
      for (int e = remaining; e >= 0; --e) {
        idx[axis] = e;
        self(self, axis + 1, remaining - e);
      }
    };
    for (int deg = std::max(1, min_degree); deg <= max_degree; ++deg) rec(rec, 0, deg);
    // rec enumerates within a grade in descending-lex; normalize to graded lex
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
  }

  int dim() const { return dim_; }
  int m() const { return static_cast<int>(stats_.size()); }
  int m_h() const { return static_cast<int>(extended_.size()) - m(); }
  int m_ext() const { return static_cast<int>(extended_.size()); }
  const std::vector<SparsePolynomial>& stats() const { return stats_; }
  const std::vector<SparsePolynomial>& extended() const { return extended_; }

  // Replace the extension with unit monomials (graded-lex order assumed by
  // the caller); entries duplicating a base statistic are rejected.
  void set_extension(const std::vector<MultiIndex>& extra) {
    extended_.assign(stats_.begin(), stats_.end());
    for (const auto& idx : extra) {
      if (static_cast<int>(idx.size()) != dim_)
        throw std::invalid_argument("ExpFamily: extension index dimension mismatch");
      extended_.push_back(SparsePolynomial::monomial(idx));
    }
    rebuild_lookup();
  }

  // Position in the extended statistics of the entry proportional to
  // x^alpha, together with its coefficient, if present.
  std::optional<std::pair<int, double>> find_monomial(const MultiIndex& idx) const {
    auto it = lookup_.find(idx);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

 private:
  void rebuild_lookup() {
    lookup_.clear();
    for (int k = 0; k < static_cast<int>(extended_.size()); ++k) {
      const auto& p = extended_[k];
      if (p.term_count() != 1) continue;  // general polynomials are not indexed
      const auto& [idx, coeff] = *p.terms().begin();
      if (!lookup_.emplace(idx, std::make_pair(k, coeff)).second)
        throw std::invalid_argument("ExpFamily: duplicate monomial statistic");
    }
  }

  std::vector<SparsePolynomial> stats_;
  std::vector<SparsePolynomial> extended_;
  std::map<MultiIndex, std::pair<int, double>, GradedLexLess> lookup_;
  int dim_;
};

// Continuous-time state-space model
//   dx = f(x) dt + rho(x) dW,   dy = h(x) dt + dV,
// with Wiener spectral densities Q (for W) and identity (for V).
struct ModelSpec {
  std::vector<SparsePolynomial> drift;             // d entries
  std::vector<std::vector<SparsePolynomial>> rho;  // d x d_w
  Eigen::MatrixXd q;                               // d_w x d_w
  std::vector<SparsePolynomial> obs;               // d_y entries

  int dim() const { return static_cast<int>(drift.size()); }
  int noise_dim() const { return static_cast<int>(q.rows()); }
  int obs_dim() const { return static_cast<int>(obs.size()); }

  void validate() const {
    const int d = dim();
    if (d == 0) throw std::invalid_argument("ModelSpec: empty drift");
    for (const auto& f : drift)
      if (f.dim() != d) throw std::invalid_argument("ModelSpec: drift dimension mismatch");
    if (static_cast<int>(rho.size()) != d)
      throw std::invalid_argument("ModelSpec: rho row count mismatch");
    for (const auto& row : rho) {
      if (static_cast<int>(row.size()) != noise_dim())
        throw std::invalid_argument("ModelSpec: rho column count mismatch");
      for (const auto& p : row)
        if (p.dim() != d) throw std::invalid_argument("ModelSpec: rho entry dimension mismatch");
    }
    if (q.rows() != q.cols()) throw std::invalid_argument("ModelSpec: Q must be square");
    for (const auto& p : obs)
      if (p.dim() != d) throw std::invalid_argument("ModelSpec: obs entry dimension mismatch");
  }

  // a = rho Q rho^T as a symmetric polynomial matrix.
  std::vector<std::vector<SparsePolynomial>> diffusion_matrix() const {
    const int d = dim();
    const int dw = noise_dim();
    std::vector<std::vector<SparsePolynomial>> a(
        d, std::vector<SparsePolynomial>(d, SparsePolynomial(d)));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < dw; ++k)
          for (int l = 0; l < dw; ++l) {
            if (q(k, l) == 0.0) continue;
            a[i][j] += q(k, l) * (rho[i][k] * rho[j][l]);
          }
    return a;
  }
};

// Constant coefficients of the reduced filter equation:
//   L[c] - 1/2 (h^T h) c = a0 + A0 c~         (componentwise polynomial identity)
//   1/2 h^T h            = b0 + b_h^T c~
//   h                    = lambda0 + lambda^T c  (lambda is m x d_y)
struct CoefficientDecomposition {
  Eigen::VectorXd a0;
  Eigen::MatrixXd A0;
  double b0 = 0.0;
  Eigen::VectorXd b_h;
  Eigen::VectorXd lambda0;
  Eigen::MatrixXd lambda;
  // generator part alone: L[c] = aL0 + AL c~.  The filter propagates with
  // E[L c] - Cov(c, c~) b_h, which is algebraically the same drift as
  // a0 + b0 eta + (A0 + eta b_h^T) eta~ but free of the large cancelling
  // coefficients that h^T h c contributes to A0 when the observation gain
  // is large.
  Eigen::VectorXd aL0;
  Eigen::MatrixXd AL;
  ExpFamily family;  // with the extension c_h attached
};

namespace detail {

inline std::string monomial_name(const MultiIndex& idx) {
  std::ostringstream os;
  os << "x^(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ',';
    os << idx[i];
  }
  os << ')';
  return os.str();
}

}  // namespace detail

// Builds the coefficient data for a model satisfying the span assumptions,
// extending the family with every monomial degree up to the closure degree of
// { L[c], (h^T h) c, h^T h }.
inline CoefficientDecomposition build_decomposition(const ModelSpec& model,
                                                    const ExpFamily& base_family) {
  model.validate();
  const int d = base_family.dim();
  if (model.dim() != d)
    throw std::invalid_argument("build_decomposition: model/family dimension mismatch");
  const int m = base_family.m();
  const int dy = model.obs_dim();

  // base statistics must be monomials (up to scale)
  std::map<MultiIndex, std::pair<int, double>, GradedLexLess> stat_pos;
  for (int k = 0; k < m; ++k) {
    const auto& s = base_family.stats()[k];
    if (s.term_count() != 1)
      throw std::invalid_argument("build_decomposition: statistics must be monomials");
    const auto& [idx, coeff] = *s.terms().begin();
    if (total_degree(idx) == 0)
      throw std::invalid_argument("build_decomposition: constant statistic not allowed");
    stat_pos.emplace(idx, std::make_pair(k, coeff));
  }

  // h = lambda0 + lambda^T c, read term by term; anything outside the span of
  // {1, c} violates the observation-span assumption.
  Eigen::VectorXd lambda0 = Eigen::VectorXd::Zero(dy);
  Eigen::MatrixXd lambda = Eigen::MatrixXd::Zero(m, dy);
  for (int j = 0; j < dy; ++j) {
    for (const auto& [idx, coeff] : model.obs[j].terms()) {
      if (total_degree(idx) == 0) {
        lambda0[j] += coeff;
        continue;
      }
      auto it = stat_pos.find(idx);
      if (it == stat_pos.end())
        throw std::invalid_argument(
            "build_decomposition: observation component " + std::to_string(j + 1) +
            " contains " + detail::monomial_name(idx) +
            ", which is not spanned by {1, c}");
      lambda(it->second.first, j) += coeff / it->second.second;
    }
  }

  const auto a = model.diffusion_matrix();
  SparsePolynomial hth(d);
  for (int j = 0; j < dy; ++j) hth += model.obs[j] * model.obs[j];
  const SparsePolynomial half_hth = 0.5 * hth;

  std::vector<SparsePolynomial> targets;
  std::vector<SparsePolynomial> generator_images;
  targets.reserve(m);
  generator_images.reserve(m);
  int closure_degree = 0;
  for (int k = 0; k < m; ++k) {
    SparsePolynomial lc = generator_apply(model.drift, a, base_family.stats()[k]);
    SparsePolynomial t = lc - half_hth * base_family.stats()[k];
    closure_degree = std::max(closure_degree, std::max(t.degree(), lc.degree()));
    targets.push_back(std::move(t));
    generator_images.push_back(std::move(lc));
  }
  closure_degree = std::max(closure_degree, half_hth.degree());
  for (const auto& s : base_family.stats()) closure_degree = std::max(closure_degree, s.degree());

  // extension: every monomial of degree 1..closure_degree not already a statistic
  std::vector<MultiIndex> extension;
  for (const MultiIndex& idx : ExpFamily::monomial_indices(d, 1, closure_degree))
    if (stat_pos.find(idx) == stat_pos.end()) extension.push_back(idx);

  const int me = m + static_cast<int>(extension.size());
  CoefficientDecomposition out{Eigen::VectorXd::Zero(m),
                               Eigen::MatrixXd::Zero(m, me),
                               0.0,
                               Eigen::VectorXd::Zero(me),
                               lambda0,
                               lambda,
                               Eigen::VectorXd::Zero(m),
                               Eigen::MatrixXd::Zero(m, me),
                               base_family};
  out.family.set_extension(extension);

  auto scatter = [&](const SparsePolynomial& p, auto&& put, double& c0) {
    for (const auto& [idx, coeff] : p.terms()) {
      if (total_degree(idx) == 0) {
        c0 += coeff;
        continue;
      }
      auto hit = out.family.find_monomial(idx);
      if (!hit)
        throw std::logic_error("build_decomposition: closure missing " +
                               detail::monomial_name(idx));
      put(hit->first, coeff / hit->second);
    }
  };

  for (int k = 0; k < m; ++k) {
    double c0 = 0.0;
    scatter(targets[k], [&](int pos, double v) { out.A0(k, pos) += v; }, c0);
    out.a0[k] = c0;
    c0 = 0.0;
    scatter(generator_images[k], [&](int pos, double v) { out.AL(k, pos) += v; }, c0);
    out.aL0[k] = c0;
  }
  scatter(half_hth, [&](int pos, double v) { out.b_h[pos] += v; }, out.b0);
  return out;
}

}  // namespace apf
