#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "ndiv/construct.hpp"
#include "ndiv/kernels.hpp"
#include "ndiv/roots.hpp"
#include "ndiv/spectrum.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
double best_ms(Fn&& fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void print_row(const std::string& name, std::size_t points, double serial_ms, double parallel_ms,
               bool match) {
  std::cout << std::left << std::setw(22) << name << std::right << std::setw(10) << points
            << std::setw(12) << std::fixed << std::setprecision(2) << serial_ms << std::setw(12)
            << parallel_ms << std::setw(10) << std::setprecision(2)
            << (parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0) << std::setw(9)
            << (match ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  // --scale N shrinks every workload by N (quick smoke runs).
  double scale = 1.0;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--scale" && i + 1 < argc) scale = std::atof(argv[i + 1]);
  }
  if (!(scale >= 1.0)) scale = 1.0;

  const ndiv::BranchFunction f = ndiv::example_f1(3);
  const ndiv::BranchFunction g = ndiv::root_candidate(f, ndiv::PhaseVector{3, {1, 2}});
  const double per_unit = 65536.0 / scale;
  const std::vector<double> grid = ndiv::default_grid(f, per_unit);
  const ndiv::CosineSpectrum s = ndiv::spectrum_of(ndiv::root_candidate(f, {3, {0, 0}}));
  const double t1 = 500.0 / scale;
  const double step = 1e-4;
  const auto scan_points = static_cast<std::size_t>(t1 / step) + 1;

  std::cout << std::left << std::setw(22) << "kernel" << std::right << std::setw(10) << "points"
            << std::setw(12) << "serial ms" << std::setw(12) << "parallel ms" << std::setw(10)
            << "speedup" << std::setw(9) << "match" << "\n";

  {
    std::vector<std::complex<double>> a, b;
    const double sm = best_ms([&] { a = ndiv::eval_grid_serial(f, grid); });
    const double pm = best_ms([&] { b = ndiv::eval_grid(f, grid); });
    print_row("eval_grid", grid.size(), sm, pm, a == b);
  }
  {
    ndiv::GridPoint a, b;
    const double sm = best_ms([&] { a = ndiv::min_bracket_scan_serial(s, 0.0, t1, step); });
    const double pm = best_ms([&] { b = ndiv::min_bracket_scan(s, 0.0, t1, step); });
    print_row("min_bracket_scan", scan_points, sm, pm, a == b);
  }
  {
    ndiv::GridPoint a, b;
    const double sm = best_ms([&] { a = ndiv::max_pow_residual_serial(g, f, 3, grid); });
    const double pm = best_ms([&] { b = ndiv::max_pow_residual(g, f, 3, grid); });
    print_row("max_pow_residual", grid.size(), sm, pm, a == b);
  }
  {
    ndiv::GridPoint a, b;
    const double sm = best_ms([&] { a = ndiv::max_hermitian_defect_serial(f, grid); });
    const double pm = best_ms([&] { b = ndiv::max_hermitian_defect(f, grid); });
    print_row("max_hermitian_defect", grid.size(), sm, pm, a == b);
  }
  return 0;
}
