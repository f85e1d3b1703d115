#include "ndiv/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ndiv {

PhaseAngle::PhaseAngle(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw spec_error("phase denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

double PhaseProfile::value_at(double x) const {
  if (xs.empty()) throw spec_error("empty phase profile");
  if (x <= xs.front()) return angles.front();
  if (x >= xs.back()) return angles.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
  const std::size_t lo = hi - 1;
  const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
  return angles[lo] + w * (angles[hi] - angles[lo]);
}

std::optional<double> PhaseProfile::constant_value(double tol) const {
  if (angles.empty()) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(angles.begin(), angles.end());
  if (*hi - *lo > tol) return std::nullopt;
  return 0.5 * (*lo + *hi);
}

}  // namespace ndiv
