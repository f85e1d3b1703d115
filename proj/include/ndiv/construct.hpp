#pragma once

#include <vector>

#include "ndiv/branch_function.hpp"
#include "ndiv/support.hpp"

namespace ndiv {

// How per-component scales alpha_j are chosen when not given explicitly.
//   dyadic:            alpha_j = 2^-j
//   length_normalized: alpha_j = 2^-j / (m_j * |E_j|) where m_j is the knot
//                      count of component j; keeps the total line mass of the
//                      spectrum below 1/(2*sigma) for any number of components.
enum class ScaleRule { dyadic, length_normalized };

struct ConstructionParams {
  double atom_alpha = 1.0;     // bump exponent, in [1, 2] for certified positivity
  double knot_margin = 0.7;    // target knot spacing as a fraction of 2*sigma, in (0, 1)
  double omega0_margin = 1.1;  // center weight multiplier over the dominance threshold, >= 1
  double tail_ratio = 0.5;     // geometric weight ratio on unbounded components, in (0, 1)
  ScaleRule scale_rule = ScaleRule::dyadic;
  std::vector<double> scales;          // explicit alpha_j overrides (k-1 entries) or empty
  std::vector<double> center_weights;  // explicit interior center weights or empty

  bool operator==(const ConstructionParams&) const = default;
};

// Knots for a bounded component (a, b): first knot a + sigma, last b - sigma,
// uniform in between with spacing at most margin * 2*sigma (one midpoint knot
// when the component length is exactly 2*sigma). The summed unit bumps over
// these knots are strictly positive on all of (a, b).
std::vector<double> knots_for_interval(const Interval& e, double sigma, double margin);

// Knots for the center component (-b0, b0): {0, -d, -2d, ..., -(b0 - sigma)},
// spacing at most margin * 2*sigma. Mirrored knots are implied by symmetry.
std::vector<double> center_knots(double b0, double sigma, double margin);

// Center weight making the constant term of the spectrum dominate the total
// absolute mass of all cosine lines:
//   omega0 = margin * (sum of interior center weights
//                      + sum over components of alpha_j * m_j
//                      + 1/(2*sigma) for a periodic rule).
// Center-only specs (no lines at all) get omega0 = 1/2 so the peak is 1.
double choose_omega0(const SupportSpec& spec, const ConstructionParams& p);

// The positive definite generator u with essential support = spec:
// center sum 2*omega0*atom + mirrored interior knots, branch j = alpha_j times
// the unit-knot sum over component j (geometric tail on an unbounded last
// component), all phases zero, power 1. With omega0_margin > 1 its spectrum
// passes the analytic dominance bound.
BranchFunction build_generator(const SupportSpec& spec, const ConstructionParams& p = {});

// f = u^n for the generator u: an n-divisible positive definite function whose
// essential support is exactly spec. Requires n >= 2.
BranchFunction construct_f(const SupportSpec& spec, int n, const ConstructionParams& p = {});

// Reference instance with support (-1,1) u +-(pi,2pi) u +-(10,15):
// f1 = v^n, v = bump + (1/8)(translates at pi+1, 2pi-1, mirrored)
//              + (1/16)(translates at 11..14, mirrored).
BranchFunction example_f1(int n);

// f1 plus a geometrically weighted tail on +-(a, inf) with branch scale 1/4,
// knots a+1, a+2, ... and weights 2^-r. Requires a > 15.
BranchFunction example_f2(int n, double a = 16.0);

}  // namespace ndiv
