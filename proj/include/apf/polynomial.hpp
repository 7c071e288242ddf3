#pragma once

// Sparse multivariate polynomials with multi-index exponents.  Carriers for
// model drift/observation functions and for natural statistics of the
// exponential families used by the projection filter.

#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace apf {

using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex& idx) {
  return std::accumulate(idx.begin(), idx.end(), 0);
}

// Graded lexicographic order: by total degree, ties broken lexicographically.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

class SparsePolynomial {
 public:
  using TermMap = std::map<MultiIndex, double, GradedLexLess>;

  // Coefficients with magnitude below this are dropped to keep the canonical
  // form stable under floating-point arithmetic.
  static constexpr double kCoefficientDrop = 1e-14;

  explicit SparsePolynomial(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("SparsePolynomial: dim must be >= 1");
  }

  static SparsePolynomial monomial(MultiIndex idx, double coeff = 1.0) {
    SparsePolynomial p(static_cast<int>(idx.size()));
    p.add_term(std::move(idx), coeff);
    return p;
  }

  static SparsePolynomial constant(int dim, double value) {
    SparsePolynomial p(dim);
    p.add_term(MultiIndex(dim, 0), value);
    return p;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int degree() const {
    int d = 0;
    for (const auto& [idx, c] : terms_) d = std::max(d, total_degree(idx));
    return d;
  }

  double coefficient(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? 0.0 : it->second;
  }

  void add_term(MultiIndex idx, double coeff) {
    if (static_cast<int>(idx.size()) != dim_)
      throw std::invalid_argument("SparsePolynomial: multi-index length mismatch");
    for (int e : idx)
      if (e < 0) throw std::invalid_argument("SparsePolynomial: negative exponent");
    auto [it, inserted] = terms_.try_emplace(std::move(idx), coeff);
    if (!inserted) it->second += coeff;
    if (std::abs(it->second) < kCoefficientDrop) terms_.erase(it);
  }

  double operator()(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_)
      throw std::invalid_argument("SparsePolynomial: evaluation point dimension mismatch");
    double acc = 0.0;
    for (const auto& [idx, c] : terms_) {
      double t = c;
      for (int i = 0; i < dim_; ++i) {
        const int e = idx[i];
        if (e == 0) continue;
        double p = x[i];
        if (e == 1) { t *= p; continue; }
        // small exponents only; plain loop beats std::pow here
        double acc_p = 1.0;
        int k = e;
        while (k > 0) {
          if (k & 1) acc_p *= p;
          p *= p;
          k >>= 1;
        }
        t *= acc_p;
      }
      acc += t;
    }
    return acc;
  }

  double operator()(std::initializer_list<double> x) const {
    return (*this)(std::span<const double>(x.begin(), x.size()));
  }

  SparsePolynomial& operator+=(const SparsePolynomial& other) {
    check_same_dim(other);
    for (const auto& [idx, c] : other.terms_) add_term(idx, c);
    return *this;
  }

  SparsePolynomial& operator-=(const SparsePolynomial& other) {
    check_same_dim(other);
    for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
    return *this;
  }

  SparsePolynomial& operator*=(double s) {
    if (s == 0.0) { terms_.clear(); return *this; }
    TermMap out;
    for (const auto& [idx, c] : terms_) {
      const double v = c * s;
      if (std::abs(v) >= kCoefficientDrop) out.emplace(idx, v);
    }
    terms_ = std::move(out);
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
    a += b;
    return a;
  }

  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
    a -= b;
    return a;
  }

  friend SparsePolynomial operator*(SparsePolynomial a, double s) {
    a *= s;
    return a;
  }

  friend SparsePolynomial operator*(double s, SparsePolynomial a) {
    a *= s;
    return a;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    a.check_same_dim(b);
    SparsePolynomial out(a.dim_);
    MultiIndex idx(a.dim_);
    for (const auto& [ia, ca] : a.terms_) {
      for (const auto& [ib, cb] : b.terms_) {
        for (int i = 0; i < a.dim_; ++i) idx[i] = ia[i] + ib[i];
        out.add_term(idx, ca * cb);
      }
    }
    return out;
  }

  SparsePolynomial differentiate(int axis) const {
    if (axis < 0 || axis >= dim_)
      throw std::invalid_argument("SparsePolynomial: differentiation axis out of range");
    SparsePolynomial out(dim_);
    for (const auto& [idx, c] : terms_) {
      if (idx[axis] == 0) continue;
      MultiIndex d = idx;
      const double factor = static_cast<double>(d[axis]);
      d[axis] -= 1;
      out.add_term(std::move(d), c * factor);
    }
    return out;
  }

  // One term per line: exponents then coefficient, space separated, with
  // round-trip decimal coefficients.  Terms appear in graded-lex order.
  std::string to_text() const {
    std::ostringstream os;
    char buf[40];
    for (const auto& [idx, c] : terms_) {
      for (int e : idx) os << e << ' ';
      std::snprintf(buf, sizeof buf, "%.17g", c);
      os << buf << '\n';
    }
    return os.str();
  }

  static SparsePolynomial from_text(int dim, const std::string& text) {
    SparsePolynomial p(dim);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream ls(line);
      MultiIndex idx(dim);
      for (int i = 0; i < dim; ++i) {
        if (!(ls >> idx[i]))
          throw std::invalid_argument("SparsePolynomial: bad term line '" + line + "'");
      }
      double coeff;
      if (!(ls >> coeff))
        throw std::invalid_argument("SparsePolynomial: missing coefficient in '" + line + "'");
      p.add_term(std::move(idx), coeff);
    }
    return p;
  }

 private:
  void check_same_dim(const SparsePolynomial& other) const {
    if (dim_ != other.dim_)
      throw std::invalid_argument("SparsePolynomial: dimension mismatch");
  }

  int dim_;
  TermMap terms_;
};

// Backward diffusion generator L[phi] = f^T grad(phi) + 1/2 tr(a hess(phi))
// with a = rho Q rho^T given as a symmetric d x d polynomial matrix.
inline SparsePolynomial generator_apply(const std::vector<SparsePolynomial>& drift,
                                        const std::vector<std::vector<SparsePolynomial>>& a,
                                        const SparsePolynomial& phi) {
  const int d = phi.dim();
  if (static_cast<int>(drift.size()) != d)
    throw std::invalid_argument("generator_apply: drift dimension mismatch");
  if (static_cast<int>(a.size()) != d)
    throw std::invalid_argument("generator_apply: diffusion matrix dimension mismatch");
  SparsePolynomial out(d);
  for (int i = 0; i < d; ++i) {
    if (drift[i].dim() != d)
      throw std::invalid_argument("generator_apply: drift entry dimension mismatch");
    out += drift[i] * phi.differentiate(i);
  }
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(a[i].size()) != d)
      throw std::invalid_argument("generator_apply: diffusion matrix not square");
    for (int j = 0; j < d; ++j) {
      if (a[i][j].is_zero()) continue;
      out += 0.5 * (a[i][j] * phi.differentiate(i).differentiate(j));
    }
  }
  return out;
}

}  // namespace apf
