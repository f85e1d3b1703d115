#include "ndiv/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace ndiv {

namespace {

std::complex<double> complex_pow_i(std::complex<double> x, int m) {
  std::complex<double> r{1.0, 0.0};
  std::complex<double> b = x;
  for (int e = m; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

// First minimum of sample(i).value over i = 0..n-1, serial reference.
template <class Fn>
GridPoint scan_min_serial_impl(std::int64_t n, Fn sample) {
  if (n < 1) throw spec_error("empty scan");
  GridPoint best = sample(0);
  for (std::int64_t i = 1; i < n; ++i) {
    const GridPoint s = sample(i);
    if (s.value < best.value) best = s;
  }
  return best;
}

// Same result as the serial scan: per-thread chunks keep their first minimum,
// the merge breaks value ties toward the smaller index.
template <class Fn>
GridPoint scan_min_parallel_impl(std::int64_t n, Fn sample) {
  if (n < 1) throw spec_error("empty scan");
  GridPoint best{};
  std::int64_t best_i = -1;
#pragma omp parallel
  {
    GridPoint local{};
    std::int64_t local_i = -1;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      const GridPoint s = sample(i);
      if (local_i < 0 || s.value < local.value) {
        local = s;
        local_i = i;
      }
    }
#pragma omp critical
    {
      if (local_i >= 0 && (best_i < 0 || local.value < best.value ||
                           (local.value == best.value && local_i < best_i))) {
        best = local;
        best_i = local_i;
      }
    }
  }
  return best;
}

template <class Fn>
GridPoint scan_max_serial_impl(std::int64_t n, Fn sample) {
  GridPoint r = scan_min_serial_impl(n, [&sample](std::int64_t i) {
    GridPoint s = sample(i);
    s.value = -s.value;
    return s;
  });
  r.value = -r.value;
  return r;
}

template <class Fn>
GridPoint scan_max_parallel_impl(std::int64_t n, Fn sample) {
  GridPoint r = scan_min_parallel_impl(n, [&sample](std::int64_t i) {
    GridPoint s = sample(i);
    s.value = -s.value;
    return s;
  });
  r.value = -r.value;
  return r;
}

std::int64_t scan_count(double t0, double t1, double step) {
  if (!(step > 0.0) || !(t1 >= t0)) throw spec_error("bad scan range");
  return static_cast<std::int64_t>(std::floor((t1 - t0) / step + 1e-9)) + 1;
}

void append_samples(std::vector<double>& pts, double lo, double hi, double per_unit) {
  const double len = hi - lo;
  const auto cells = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::ceil(per_unit * len)));
  for (std::int64_t i = 0; i <= cells; ++i)
    pts.push_back(i == cells ? hi : lo + static_cast<double>(i) * len / static_cast<double>(cells));
  const double probe = 1e-6;
  pts.insert(pts.end(), {lo - probe, lo + probe, hi - probe, hi + probe});
}

}  // namespace

std::vector<double> default_grid(const BranchFunction& f, double per_unit, int max_component,
                                 double tail_window) {
  if (!(per_unit > 0.0)) throw spec_error("grid density must be positive");
  const SupportSpec& spec = f.spec();
  std::vector<double> right;  // points in [0, inf); mirrored afterwards
  if (spec.infinite()) {
    append_samples(right, 0.0, spec.center().hi, per_unit);
    for (int j = 1; j <= max_component; ++j) {
      const Interval e = spec.positive_component(j);
      append_samples(right, e.lo, e.hi, per_unit);
    }
  } else {
    append_samples(right, 0.0, spec.center().hi, per_unit);
    for (int j = 1; j < spec.k(); ++j) {
      const Interval e = spec.positive_component(j);
      const double hi =
          std::isinf(e.hi) ? e.lo + tail_window * f.atom().half_width : e.hi;
      append_samples(right, e.lo, hi, per_unit);
    }
  }
  std::vector<double> pts;
  pts.reserve(2 * right.size() + 1);
  pts.push_back(0.0);
  for (double p : right) {
    pts.push_back(p);
    pts.push_back(-p);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<double> union_grid(const BranchFunction& f, const BranchFunction& g, double per_unit,
                               int max_component) {
  std::vector<double> a = default_grid(f, per_unit, max_component);
  const std::vector<double> b = default_grid(g, per_unit, max_component);
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<std::complex<double>> eval_grid(const BranchFunction& f, std::span<const double> xs) {
  std::vector<std::complex<double>> out(xs.size());
  const auto n = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f.eval(xs[i]);
  return out;
}

std::vector<std::complex<double>> eval_grid_serial(const BranchFunction& f,
                                                   std::span<const double> xs) {
  std::vector<std::complex<double>> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f.eval(xs[i]);
  return out;
}

GridPoint min_bracket_scan(const CosineSpectrum& s, double t0, double t1, double step) {
  return scan_min_parallel_impl(scan_count(t0, t1, step), [&](std::int64_t i) {
    const double t = t0 + static_cast<double>(i) * step;
    return GridPoint{t, s.bracket(t)};
  });
}

GridPoint min_bracket_scan_serial(const CosineSpectrum& s, double t0, double t1, double step) {
  return scan_min_serial_impl(scan_count(t0, t1, step), [&](std::int64_t i) {
    const double t = t0 + static_cast<double>(i) * step;
    return GridPoint{t, s.bracket(t)};
  });
}

namespace {

auto residual_at(const BranchFunction& g, const BranchFunction& f, int n,
                 std::span<const double> xs) {
  return [&g, &f, n, xs](std::int64_t i) {
    const double x = xs[static_cast<std::size_t>(i)];
    return GridPoint{x, std::abs(complex_pow_i(g.eval(x), n) - f.eval(x))};
  };
}

auto hermitian_defect_at(const BranchFunction& f, std::span<const double> xs) {
  return [&f, xs](std::int64_t i) {
    const double x = xs[static_cast<std::size_t>(i)];
    return GridPoint{x, std::abs(f.eval(-x) - std::conj(f.eval(x)))};
  };
}

auto abs_value_at(const BranchFunction& f, std::span<const double> xs) {
  return [&f, xs](std::int64_t i) {
    const double x = xs[static_cast<std::size_t>(i)];
    return GridPoint{x, std::abs(f.eval(x))};
  };
}

}  // namespace

GridPoint max_pow_residual(const BranchFunction& g, const BranchFunction& f, int n,
                           std::span<const double> xs) {
  return scan_max_parallel_impl(static_cast<std::int64_t>(xs.size()), residual_at(g, f, n, xs));
}

GridPoint max_pow_residual_serial(const BranchFunction& g, const BranchFunction& f, int n,
                                  std::span<const double> xs) {
  return scan_max_serial_impl(static_cast<std::int64_t>(xs.size()), residual_at(g, f, n, xs));
}

GridPoint max_hermitian_defect(const BranchFunction& f, std::span<const double> xs) {
  return scan_max_parallel_impl(static_cast<std::int64_t>(xs.size()), hermitian_defect_at(f, xs));
}

GridPoint max_hermitian_defect_serial(const BranchFunction& f, std::span<const double> xs) {
  return scan_max_serial_impl(static_cast<std::int64_t>(xs.size()), hermitian_defect_at(f, xs));
}

GridPoint max_abs_value(const BranchFunction& f, std::span<const double> xs) {
  return scan_max_parallel_impl(static_cast<std::int64_t>(xs.size()), abs_value_at(f, xs));
}

GridPoint max_abs_value_serial(const BranchFunction& f, std::span<const double> xs) {
  return scan_max_serial_impl(static_cast<std::int64_t>(xs.size()), abs_value_at(f, xs));
}

}  // namespace ndiv
