#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "ndiv/errors.hpp"

namespace ndiv {

// Exact rational multiple of a full turn: the angle 2*pi*num/den, reduced and
// normalized to 0 <= num < den. Keeping the rational instead of a double makes
// n-th root branch arithmetic exact (no drift when phases are raised to powers
// and split into root branches repeatedly).
class PhaseAngle {
 public:
  PhaseAngle() = default;

  PhaseAngle(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  double radians() const {
    return 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
  }

  // The angle scaled by an integer factor (mod full turns). Raising a value
  // with this angle to the m-th power rotates by times(m).
  PhaseAngle times(std::int64_t m) const { return PhaseAngle(num_ * m, den_); }

  // The m-th branch of the n-th root: (angle + 2*pi*m) / n.
  PhaseAngle root_branch(std::int64_t m, std::int64_t n) const {
    if (n < 1) throw spec_error("root order must be >= 1");
    return PhaseAngle(num_ + m * den_, den_ * n);
  }

  bool operator==(const PhaseAngle&) const = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Sampled continuous argument of a function along one component, unwrapped so
// adjacent samples differ by less than half a turn. Used when a function is
// known only pointwise and its phase has to be recovered before root-taking.
struct PhaseProfile {
  int component = 0;            // index j of the positive component the samples cover
  std::vector<double> xs;       // strictly increasing sample abscissas
  std::vector<double> angles;   // unwrapped angles at xs (radians)

  // Linear interpolation between samples, clamped at the ends.
  double value_at(double x) const;

  // The common angle if the profile is constant to within tol, else nullopt.
  std::optional<double> constant_value(double tol) const;

  bool operator==(const PhaseProfile&) const = default;
};

}  // namespace ndiv
