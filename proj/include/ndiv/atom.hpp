#pragma once

#include <cmath>

#include "ndiv/errors.hpp"

namespace ndiv {

// Truncated power bump: value(x) = max{(1 - |x|/half_width)^alpha, 0}.
// Supported on (-half_width, half_width), peak value 1 at the origin.
struct Atom {
  double alpha;
  double half_width;

  Atom(double alpha_, double half_width_) : alpha(alpha_), half_width(half_width_) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw spec_error("atom exponent must be positive");
    if (!(half_width > 0.0) || !std::isfinite(half_width))
      throw spec_error("atom half-width must be positive");
  }

  double operator()(double x) const {
    const double r = std::abs(x) / half_width;
    if (r >= 1.0) return 0.0;
    const double b = 1.0 - r;
    return alpha == 1.0 ? b : std::pow(b, alpha);
  }

  bool operator==(const Atom&) const = default;
};

}  // namespace ndiv
