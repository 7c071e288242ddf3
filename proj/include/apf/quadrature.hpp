#pragma once

// One-dimensional Gauss rules (Chebyshev, Patterson, Hermite) and the Smolyak
// sparse-grid construction with nested-node merging and weight pruning.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "apf/detail/gauss_patterson_data.hpp"

namespace apf {

enum class RuleFamily { GaussChebyshev, GaussPatterson, GaussHermite };
enum class GridDomain { Hypercube, RealSpace };

inline std::string to_string(RuleFamily f) {
  switch (f) {
    case RuleFamily::GaussChebyshev: return "gauss-chebyshev";
    case RuleFamily::GaussPatterson: return "gauss-patterson";
    case RuleFamily::GaussHermite: return "gauss-hermite";
  }
  return "?";
}

struct Rule1D {
  RuleFamily family;
  int level;  // -1 when constructed from a raw node count
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive for all 1-D Gauss rules
};

// Number of univariate nodes at level l in the nested sequences.
inline int level_node_count(int level) { return (1 << (level + 1)) - 1; }

constexpr int kGaussPattersonMaxLevel = 7;

// First-kind Gauss-Chebyshev rule: nodes cos((2i-1)pi/(2n)), weights pi/n,
// exact for int p(x) (1-x^2)^{-1/2} dx with deg p <= 2n-1.
inline Rule1D gauss_chebyshev(int n) {
  if (n < 1) throw std::invalid_argument("gauss_chebyshev: n must be >= 1");
  Rule1D r{RuleFamily::GaussChebyshev, -1, {}, {}};
  r.nodes.resize(n);
  r.weights.assign(n, std::numbers::pi / n);
  for (int i = 1; i <= n; ++i)
    r.nodes[n - i] = std::cos((2.0 * i - 1.0) * std::numbers::pi / (2.0 * n));
  // enforce exact symmetry of the node set
  for (int i = 0; i < n / 2; ++i) {
    const double v = 0.5 * (r.nodes[n - 1 - i] - r.nodes[i]);
    r.nodes[i] = -v;
    r.nodes[n - 1 - i] = v;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

// Nested Gauss-Patterson rules from embedded tables; level l has 2^(l+1)-1
// nodes, level 0 being the midpoint (1-point Gauss-Legendre) rule.
inline Rule1D gauss_patterson_1d(int level) {
  if (level < 0 || level > kGaussPattersonMaxLevel)
    throw std::invalid_argument("gauss_patterson_1d: level out of table range 0..7");
  static const std::pair<const double*, const double*> tables[] = {
      {detail::kGaussPattersonNodes0, detail::kGaussPattersonWeights0},
      {detail::kGaussPattersonNodes1, detail::kGaussPattersonWeights1},
      {detail::kGaussPattersonNodes2, detail::kGaussPattersonWeights2},
      {detail::kGaussPattersonNodes3, detail::kGaussPattersonWeights3},
      {detail::kGaussPattersonNodes4, detail::kGaussPattersonWeights4},
      {detail::kGaussPattersonNodes5, detail::kGaussPattersonWeights5},
      {detail::kGaussPattersonNodes6, detail::kGaussPattersonWeights6},
      {detail::kGaussPattersonNodes7, detail::kGaussPattersonWeights7},
  };
  const int n = level_node_count(level);
  Rule1D r{RuleFamily::GaussPatterson, level, {}, {}};
  r.nodes.assign(tables[level].first, tables[level].first + n);
  r.weights.assign(tables[level].second, tables[level].second + n);
  return r;
}

namespace detail {

// Orthonormal Hermite values h~_0..h~_n at x (weight e^{-x^2}); returns h~_n
// and fills sum_sq with sum_{k<n} h~_k^2 (the inverse Christoffel weight).
inline double orthonormal_hermite(int n, double x, double& sum_sq, double& deriv) {
  double hkm1 = 0.0;
  double hk = std::pow(std::numbers::pi, -0.25);
  sum_sq = 0.0;
  for (int k = 0; k < n; ++k) {
    sum_sq += hk * hk;
    const double hkp1 =
        x * std::sqrt(2.0 / (k + 1)) * hk - std::sqrt(k / (k + 1.0)) * hkm1;
    hkm1 = hk;
    hk = hkp1;
  }
  deriv = std::sqrt(2.0 * n) * hkm1;  // h~_n' = sqrt(2n) h~_{n-1}
  return hk;
}

}  // namespace detail

// Gauss-Hermite rule for weight e^{-x^2}: Golub-Welsch eigenvalues refined by
// Newton steps on the orthonormal recurrence, weights from the Christoffel
// function.  sum(w) = sqrt(pi); exact for polynomials of degree <= 2n-1.
inline Rule1D gauss_hermite_1d(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite_1d: n must be >= 1");
  Rule1D r{RuleFamily::GaussHermite, -1, {}, {}};
  r.nodes.resize(n);
  r.weights.resize(n);
  if (n == 1) {
    r.nodes[0] = 0.0;
    r.weights[0] = std::sqrt(std::numbers::pi);
    return r;
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(k / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_hermite_1d: eigen-solver failed to converge");
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()[i];
    double sum_sq = 0.0, deriv = 0.0;
    for (int it = 0; it < 3; ++it) {
      const double hn = detail::orthonormal_hermite(n, x, sum_sq, deriv);
      const double step = hn / deriv;
      x -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    detail::orthonormal_hermite(n, x, sum_sq, deriv);
    r.nodes[i] = x;
    r.weights[i] = 1.0 / sum_sq;
  }
  // symmetrize: Hermite rules are symmetric; the eigensolver output is not
  // bitwise so, and the Smolyak merge relies on exact +/- pairs.
  for (int i = 0; i < n / 2; ++i) {
    const double v = 0.5 * (r.nodes[n - 1 - i] - r.nodes[i]);
    r.nodes[i] = -v;
    r.nodes[n - 1 - i] = v;
    const double w = 0.5 * (r.weights[i] + r.weights[n - 1 - i]);
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

inline Rule1D rule_for_level(RuleFamily family, int level) {
  switch (family) {
    case RuleFamily::GaussPatterson:
      return gauss_patterson_1d(level);
    case RuleFamily::GaussHermite: {
      Rule1D r = gauss_hermite_1d(level_node_count(level));
      r.level = level;
      return r;
    }
    case RuleFamily::GaussChebyshev: {
      Rule1D r = gauss_chebyshev(level_node_count(level));
      r.level = level;
      return r;
    }
  }
  throw std::invalid_argument("rule_for_level: unknown family");
}

struct QuadratureGrid {
  int dim = 0;
  int level = -1;
  RuleFamily family = RuleFamily::GaussPatterson;
  GridDomain domain = GridDomain::Hypercube;
  Eigen::MatrixXd nodes;    // N x dim
  Eigen::VectorXd weights;  // may contain negative entries for sparse grids

  int size() const { return static_cast<int>(weights.size()); }
};

inline GridDomain domain_of(RuleFamily family) {
  return family == RuleFamily::GaussHermite ? GridDomain::RealSpace
                                            : GridDomain::Hypercube;
}

inline QuadratureGrid grid_from_rule(const Rule1D& rule) {
  QuadratureGrid g;
  g.dim = 1;
  g.level = rule.level;
  g.family = rule.family;
  g.domain = domain_of(rule.family);
  const int n = static_cast<int>(rule.nodes.size());
  g.nodes.resize(n, 1);
  g.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    g.nodes(i, 0) = rule.nodes[i];
    g.weights[i] = rule.weights[i];
  }
  return g;
}

namespace detail {

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

// Classic Smolyak combination over the nested level sequence N(1,l)=2^(l+1)-1:
// sum over multi-levels l with  level-d+1 <= |l| <= level  of
// (-1)^(level-|l|) C(d-1, level-|l|) times the tensor rule.  Coincident nodes
// are merged with summed weights (coordinates equal within 1e-12).
inline QuadratureGrid smolyak(int dim, int level, RuleFamily family) {
  if (dim < 1) throw std::invalid_argument("smolyak: dim must be >= 1");
  if (level < 0) throw std::invalid_argument("smolyak: level must be >= 0");
  if (family == RuleFamily::GaussPatterson && level > kGaussPattersonMaxLevel)
    throw std::invalid_argument("smolyak: Gauss-Patterson level exceeds table range");

  std::vector<Rule1D> rules;
  rules.reserve(level + 1);
  for (int l = 0; l <= level; ++l) rules.push_back(rule_for_level(family, l));

  std::map<std::vector<double>, double> acc;  // lexicographic node -> weight
  std::vector<int> lv(dim, 0);
  std::vector<double> pt(dim);
  const int lo = std::max(0, level - dim + 1);

  std::function<void(int, int)> enumerate = [&](int axis, int used) {
    if (axis == dim - 1) {
      for (int l = std::max(0, lo - used); used + l <= level; ++l) {
        lv[axis] = l;
        const int total = used + l;
        if (total < lo) continue;
        const double coeff =
            ((level - total) % 2 == 0 ? 1.0 : -1.0) *
            static_cast<double>(detail::binomial(dim - 1, level - total));
        // tensor product of the selected 1-D rules
        std::vector<int> ii(dim, 0);
        bool done = false;
        while (!done) {
          double w = coeff;
          for (int k = 0; k < dim; ++k) {
            pt[k] = rules[lv[k]].nodes[ii[k]];
            w *= rules[lv[k]].weights[ii[k]];
          }
          acc[pt] += w;
          int k = 0;
          while (k < dim) {
            if (++ii[k] < static_cast<int>(rules[lv[k]].nodes.size())) break;
            ii[k] = 0;
            ++k;
          }
          done = (k == dim);
        }
      }
      return;
    }
    for (int l = 0; used + l <= level; ++l) {
      lv[axis] = l;
      enumerate(axis + 1, used + l);
    }
  };
  enumerate(0, 0);

  // tolerance merge of adjacent keys (nested tables are bitwise equal; this
  // absorbs eigen-solver noise if any slipped through symmetrization)
  constexpr double kMergeTol = 1e-12;
  std::vector<std::pair<std::vector<double>, double>> merged;
  merged.reserve(acc.size());
  for (auto& [p, w] : acc) {
    if (!merged.empty()) {
      const auto& prev = merged.back().first;
      bool close = true;
      for (int k = 0; k < dim && close; ++k) close = std::abs(prev[k] - p[k]) <= kMergeTol;
      if (close) {
        merged.back().second += w;
        continue;
      }
    }
    merged.emplace_back(p, w);
  }

  QuadratureGrid g;
  g.dim = dim;
  g.level = level;
  g.family = family;
  g.domain = domain_of(family);
  const int n = static_cast<int>(merged.size());
  g.nodes.resize(n, dim);
  g.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < dim; ++k) g.nodes(i, k) = merged[i].first[k];
    g.weights[i] = merged[i].second;
  }
  return g;
}

// Drop nodes with |weight| < threshold, preserving the order of survivors.
inline QuadratureGrid prune(const QuadratureGrid& grid, double threshold) {
  if (threshold < 0) throw std::invalid_argument("prune: threshold must be >= 0");
  std::vector<int> keep;
  keep.reserve(grid.size());
  for (int i = 0; i < grid.size(); ++i)
    if (std::abs(grid.weights[i]) >= threshold || threshold == 0.0) keep.push_back(i);
  QuadratureGrid out = grid;
  out.nodes.resize(static_cast<int>(keep.size()), grid.dim);
  out.weights.resize(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.nodes.row(static_cast<int>(i)) = grid.nodes.row(keep[i]);
    out.weights[static_cast<int>(i)] = grid.weights[keep[i]];
  }
  return out;
}

// CSV dump, columns x1..xd,weight, round-trip decimals.
inline std::string grid_to_csv(const QuadratureGrid& grid) {
  std::string out;
  for (int k = 0; k < grid.dim; ++k) {
    out += 'x';
    out += std::to_string(k + 1);
    out += ',';
  }
  out += "weight\n";
  char buf[40];
  for (int i = 0; i < grid.size(); ++i) {
    for (int k = 0; k < grid.dim; ++k) {
      std::snprintf(buf, sizeof buf, "%.17g,", grid.nodes(i, k));
      out += buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g\n", grid.weights[i]);
    out += buf;
  }
  return out;
}

}  // namespace apf
