#pragma once

// Densities evaluated on rectangular grids and the Hellinger distance used
// for every accuracy comparison.

#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "apf/model.hpp"

namespace apf {

struct GridAxis {
  double min = 0.0;
  double max = 0.0;
  int cells = 0;

  double step() const { return (max - min) / cells; }
  double center(int i) const { return min + (i + 0.5) * step(); }
};

// Cell-centered density values on a rectangular grid, row-major over axes
// (last axis fastest).
struct GridDensity {
  std::vector<GridAxis> axes;
  Eigen::VectorXd values;
  double cell_volume = 0.0;

  int dim() const { return static_cast<int>(axes.size()); }
  int size() const { return static_cast<int>(values.size()); }
  double integral() const { return values.sum() * cell_volume; }

  static GridDensity zeros(std::vector<GridAxis> axes_in) {
    GridDensity g;
    g.axes = std::move(axes_in);
    long n = 1;
    double vol = 1.0;
    for (const auto& a : g.axes) {
      if (a.cells < 1 || !(a.max > a.min))
        throw std::invalid_argument("GridDensity: bad axis");
      n *= a.cells;
      vol *= a.step();
    }
    g.values = Eigen::VectorXd::Zero(n);
    g.cell_volume = vol;
    return g;
  }

  // row-major flat index of a cell multi-index
  long flat_index(std::span<const int> cell) const {
    long idx = 0;
    for (int k = 0; k < dim(); ++k) idx = idx * axes[k].cells + cell[k];
    return idx;
  }

  void cell_center(long flat, std::span<double> out) const {
    for (int k = dim() - 1; k >= 0; --k) {
      const int c = static_cast<int>(flat % axes[k].cells);
      flat /= axes[k].cells;
      out[k] = axes[k].center(c);
    }
  }
};

inline bool same_grid(const GridDensity& a, const GridDensity& b) {
  if (a.dim() != b.dim()) return false;
  for (int k = 0; k < a.dim(); ++k) {
    if (a.axes[k].cells != b.axes[k].cells) return false;
    if (a.axes[k].min != b.axes[k].min || a.axes[k].max != b.axes[k].max) return false;
  }
  return true;
}

struct DensityOnGrid {
  GridDensity density;
  double integral_defect = 0.0;  // |sum * volume - 1|
};

// exp(c(x)^T theta - psi) at cell centers.
inline DensityOnGrid density_on_grid(const Eigen::VectorXd& theta, const ExpFamily& family,
                                     double psi, std::vector<GridAxis> axes) {
  if (static_cast<int>(axes.size()) != family.dim())
    throw std::invalid_argument("density_on_grid: axis count mismatch");
  if (theta.size() != family.m())
    throw std::invalid_argument("density_on_grid: theta size mismatch");
  DensityOnGrid out;
  out.density = GridDensity::zeros(std::move(axes));
  const int d = out.density.dim();
  std::vector<double> x(d);
  for (long i = 0; i < out.density.size(); ++i) {
    out.density.cell_center(i, std::span<double>(x.data(), d));
    double e = -psi;
    for (int k = 0; k < family.m(); ++k)
      e += theta[k] * family.stats()[k](std::span<const double>(x.data(), d));
    if (e > 700.0)
      throw std::overflow_error("density_on_grid: density overflow on grid");
    out.density.values[i] = std::exp(e);
  }
  out.integral_defect = std::abs(out.density.integral() - 1.0);
  return out;
}

// sqrt(1 - sum sqrt(p q) vol), clamped to [0,1].
inline double hellinger(const GridDensity& p, const GridDensity& q) {
  if (!same_grid(p, q)) throw std::invalid_argument("hellinger: grid mismatch");
  const double bc = (p.values.cwiseMax(0.0).cwiseProduct(q.values.cwiseMax(0.0)))
                        .cwiseSqrt()
                        .sum() *
                    p.cell_volume;
  const double h2 = 1.0 - bc;
  if (h2 <= 0.0) return 0.0;
  const double h = std::sqrt(h2);
  return h > 1.0 ? 1.0 : h;
}

// CSV dump: header lines with axis descriptors, then row-major values.
inline void write_grid_density_csv(const GridDensity& g, std::ostream& os) {
  os << "# axes";
  for (const auto& a : g.axes)
    os << ' ' << a.min << ':' << a.max << ':' << a.cells;
  os << '\n';
  char buf[40];
  for (long i = 0; i < g.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g\n", g.values[i]);
    os << buf;
  }
}

struct ComparisonRow {
  double t = 0.0;
  double hellinger = 0.0;
  std::vector<double> moment_errors;
};

inline void write_comparison_csv(const std::vector<std::string>& columns,
                                 const std::vector<double>& times,
                                 const std::vector<std::vector<double>>& series,
                                 std::ostream& os) {
  os << 't';
  for (const auto& c : columns) os << ',' << c;
  os << '\n';
  char buf[40];
  for (std::size_t i = 0; i < times.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.10g", times[i]);
    os << buf;
    for (const auto& s : series) {
      std::snprintf(buf, sizeof buf, ",%.10g", s[i]);
      os << buf;
    }
    os << '\n';
  }
}

}  // namespace apf
