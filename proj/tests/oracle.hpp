#pragma once

// Independent reference computations for the test suite. Everything here is
// deliberately built from first principles (plain quadrature, literal
// formulas) so the library is checked against code that shares none of its
// internals.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "ndiv/branch_function.hpp"

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

// Adaptive Simpson quadrature with explicit error control.
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                           double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 40);
}

// Inverse Fourier transform (1/2pi) * integral f(x) e^{-itx} dx by trapezoid
// sums over [-span, span]; returns the real part (imaginary part vanishes for
// Hermitian f).
inline double trapezoid_inverse_transform(const ndiv::BranchFunction& f, double t, double span,
                                          double h = 1e-3) {
  const auto steps = static_cast<long long>(std::ceil(2.0 * span / h));
  std::complex<double> acc{0.0, 0.0};
  for (long long i = 0; i <= steps; ++i) {
    const double x = -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(steps);
    const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
    acc += w * f.eval(x) * std::polar(1.0, -t * x);
  }
  return (acc * (2.0 * span / static_cast<double>(steps) / (2.0 * kPi))).real();
}

// The reference construction written out literally: unit bump, two translate
// packets at {pi+1, 2pi-1} and {11, 12, 13, 14} with weights 1/8 and 1/16,
// symmetrized, all raised to the n-th power.
inline double bump(double x) { return std::max(0.0, 1.0 - std::abs(x)); }

inline double f1_packets(double x) {
  return 0.125 * (bump(x - (kPi + 1.0)) + bump(x - (2.0 * kPi - 1.0))) +
         0.0625 * (bump(x - 11.0) + bump(x - 12.0) + bump(x - 13.0) + bump(x - 14.0));
}

inline double f1_direct(double x, int n) {
  return std::pow(bump(x) + f1_packets(x) + f1_packets(-x), n);
}

}  // namespace oracle
