#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ndiv/branch_function.hpp"
#include "ndiv/spectrum.hpp"

namespace ndiv {

// One sampled value together with where it was taken.
struct GridPoint {
  double at = 0.0;
  double value = 0.0;
  bool operator==(const GridPoint&) const = default;
};

// Sample grid covering the support of f: `per_unit` uniform samples per unit
// length on every bounded component (mirrors included) plus the center, probe
// points just inside and outside each endpoint, and a window reaching
// `tail_window` * half_width into unbounded components. Periodic supports are
// covered up to component +-max_component. Sorted, duplicate-free, includes 0.
std::vector<double> default_grid(const BranchFunction& f, double per_unit = 64.0,
                                 int max_component = 8, double tail_window = 12.0);

// Merge of the default grids of f and g.
std::vector<double> union_grid(const BranchFunction& f, const BranchFunction& g,
                               double per_unit = 64.0, int max_component = 8);

// Each kernel has an OpenMP-parallel entry point and a `_serial` reference
// implementation with identical results (bit-for-bit, ties broken toward the
// smallest index). Tests pin the equivalence; the bench tool times the pair.

// f sampled at xs.
std::vector<std::complex<double>> eval_grid(const BranchFunction& f, std::span<const double> xs);
std::vector<std::complex<double>> eval_grid_serial(const BranchFunction& f,
                                                   std::span<const double> xs);

// Minimum of the spectrum bracket over t = t0 + i*step <= t1.
GridPoint min_bracket_scan(const CosineSpectrum& s, double t0, double t1, double step);
GridPoint min_bracket_scan_serial(const CosineSpectrum& s, double t0, double t1, double step);

// Maximum of |g(x)^n - f(x)| over xs: the n-th root residual.
GridPoint max_pow_residual(const BranchFunction& g, const BranchFunction& f, int n,
                           std::span<const double> xs);
GridPoint max_pow_residual_serial(const BranchFunction& g, const BranchFunction& f, int n,
                                  std::span<const double> xs);

// Maximum of |f(-x) - conj(f(x))| over xs.
GridPoint max_hermitian_defect(const BranchFunction& f, std::span<const double> xs);
GridPoint max_hermitian_defect_serial(const BranchFunction& f, std::span<const double> xs);

// Maximum of |f(x)| over xs.
GridPoint max_abs_value(const BranchFunction& f, std::span<const double> xs);
GridPoint max_abs_value_serial(const BranchFunction& f, std::span<const double> xs);

}  // namespace ndiv
