#pragma once

#include <complex>
#include <map>
#include <variant>
#include <vector>

#include "ndiv/phase.hpp"
#include "ndiv/support.hpp"
#include "ndiv/translate_sum.hpp"

namespace ndiv {

// Phase of a branch: either an exact rational multiple of a full turn or a
// sampled profile recovered from pointwise data.
using BranchPhase = std::variant<PhaseAngle, PhaseProfile>;

// The restriction of a function to one positive component E_j:
// value(x) = scale^power * shape(x)^power * exp(i * phase). The phase stored
// here is the angle of the value itself (already including any power).
struct Branch {
  double scale;
  TranslateSum shape;
  BranchPhase phase;
  bool operator==(const Branch&) const = default;
};

// Piecewise (modulus, phase) representation of a Hermitian function on the
// line whose essential support is exactly `spec`:
//   - on the center component: center(x)^power (real, nonnegative),
//   - on E_j (j > 0): scale_j^power * shape_j(x)^power * exp(i*phase_j(x)),
//   - on E_{-j}: the conjugate mirror, value(-x) = conj(value(x)),
//   - zero outside.
// Functions built over a periodic support rule hold one sparse phase map and
// synthesize branch j on demand: unit knot at j*period, scale 2^{-j}/width.
class BranchFunction {
 public:
  BranchFunction(SupportSpec spec, TranslateSum center, std::vector<Branch> branches, int power);

  static BranchFunction with_periodic_branches(SupportSpec spec, TranslateSum center,
                                               std::map<int, PhaseAngle> phases, int power);

  std::complex<double> eval(double x) const;
  double value_at_zero() const;

  const SupportSpec& spec() const { return spec_; }
  const TranslateSum& center() const { return center_; }
  int power() const { return power_; }
  const Atom& atom() const { return center_.atom(); }

  bool periodic() const { return spec_.infinite(); }
  bool exact_phases() const;  // no sampled-profile phases anywhere

  // Explicitly stored branches of a finite-support function (size k-1).
  const std::vector<Branch>& branches() const;

  // Branch for component j >= 1; synthesized on demand for periodic specs.
  Branch branch(int j) const;

  // Nonzero phases of a periodic-support function, keyed by component index.
  const std::map<int, PhaseAngle>& sparse_phases() const;

  // Same modulus data raised to the m-th power: power *= m, phases *= m.
  BranchFunction powered(int m) const;

  bool operator==(const BranchFunction&) const = default;

 private:
  BranchFunction(SupportSpec spec, TranslateSum center, std::vector<Branch> branches,
                 std::map<int, PhaseAngle> sparse, int power, bool periodic_tag);

  std::complex<double> positive_branch_value(int j, double x) const;

  SupportSpec spec_;
  TranslateSum center_;
  std::vector<Branch> branches_;          // finite specs only
  std::map<int, PhaseAngle> sparse_;      // periodic specs only
  int power_;
};

std::complex<double> eval_branch(const BranchFunction& f, double x);

// x^m for integer m >= 0 by repeated multiplication (deterministic, fast).
double pow_i(double x, int m);

}  // namespace ndiv
