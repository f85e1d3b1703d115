#pragma once

#include <cmath>
#include <limits>

#include "ndiv/errors.hpp"

namespace ndiv {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Open interval (lo, hi). Either endpoint may be infinite, but lo < hi always.
struct Interval {
  double lo;
  double hi;

  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (std::isnan(lo) || std::isnan(hi) || !(lo < hi))
      throw spec_error("interval endpoints must satisfy lo < hi");
  }

  double length() const { return hi - lo; }
  bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }
  bool contains(double x) const { return lo < x && x < hi; }

  double midpoint() const {
    if (!bounded()) throw spec_error("midpoint of unbounded interval");
    return 0.5 * (lo + hi);
  }

  // Reflection through the origin: (lo, hi) -> (-hi, -lo).
  Interval mirrored() const { return Interval(-hi, -lo); }

  bool operator==(const Interval&) const = default;
};

}  // namespace ndiv
