#pragma once

#include <optional>
#include <vector>

#include "ndiv/atom.hpp"
#include "ndiv/branch_function.hpp"

namespace ndiv {

// One cosine line: coeff * cos(freq * t + phase).
struct CosTerm {
  double coeff;
  double freq;
  double phase;
  bool operator==(const CosTerm&) const = default;
};

// Geometric family of cosine lines sharing one phase:
// sum_{r>=1} scale * ratio*(1-ratio)^(r-1) * cos((base + r*spacing) t + phase).
struct CosTail {
  double scale;
  double base;
  double spacing;
  double ratio;
  double phase;
  bool operator==(const CosTail&) const = default;
};

// Inverse Fourier transform of a real translate-sum construction, factored as
//   value(t) = 2 * atom_inverse_transform(atom, t) * bracket(t),
//   bracket(t) = constant + sum of cosine terms + tails (+- remainder).
// The atom factor is strictly positive, so nonnegativity of the transform is
// exactly nonnegativity of the bracket. `remainder` bounds the absolute error
// from truncating an infinite family of lines (periodic constructions).
class CosineSpectrum {
 public:
  CosineSpectrum(Atom atom, double constant, std::vector<CosTerm> terms,
                 std::vector<CosTail> tails = {}, double remainder = 0.0);

  double bracket(double t) const;          // truncation error below 1e-14 relative
  double value(double t) const;            // 2 * atom factor * bracket

  const Atom& atom() const { return atom_; }
  double constant() const { return constant_; }
  const std::vector<CosTerm>& terms() const { return terms_; }
  const std::vector<CosTail>& tails() const { return tails_; }
  double remainder() const { return remainder_; }

  // Largest line frequency that carries non-negligible weight (sets Nyquist
  // style step bounds for grid scans).
  double max_frequency() const;

 private:
  Atom atom_;
  double constant_;
  std::vector<CosTerm> terms_;
  std::vector<CosTail> tails_;
  double remainder_;
};

// Pointwise inverse transform of the atom: (1/2pi) * integral of
// atom(x) * e^{-itx} dx, real and even in t. For alpha = 1 this is the exact
// closed form (1 - cos(sigma t)) * sigma / (pi * (sigma t)^2) with a series
// branch near t = 0; for alpha > 1 it falls back to adaptive quadrature.
// Strictly positive for 1 <= alpha <= 2 except at isolated zeros (alpha = 1).
double atom_inverse_transform(const Atom& atom, double t);

// Exact line decomposition of the inverse transform of a branch function with
// exact rational phases. Throws spec_error when a branch carries a sampled
// phase profile (no closed form) or power != 1.
CosineSpectrum spectrum_of(const BranchFunction& u);

// constant - (total absolute line mass) - remainder: a certified lower bound
// for bracket(t) over all t. Positive bound proves the transform nonnegative.
double bracket_lower_bound(const CosineSpectrum& s);

struct PsdWitness {
  std::vector<double> points;  // offending t for grid path; point set for eigen path
  double value;                // bracket value or smallest eigenvalue found
  bool operator==(const PsdWitness&) const = default;
};

enum class PsdPath { analytic, grid, eigen };

struct PsdVerdict {
  bool passed = false;
  PsdPath path = PsdPath::analytic;
  std::optional<PsdWitness> witness;
  bool operator==(const PsdVerdict&) const = default;
};

// Nonnegative-spectrum check: first the analytic lower bound, then a grid scan
// of the bracket on [0, t_max] with tolerance -1e-12. Passing the analytic
// route reports path = analytic with no witness; a grid failure reports the
// offending t and bracket value.
PsdVerdict bochner_check(const CosineSpectrum& s, double grid_step, double t_max);
PsdVerdict bochner_check(const CosineSpectrum& s);

double default_bochner_step(const CosineSpectrum& s);
double default_bochner_tmax(const CosineSpectrum& s);

}  // namespace ndiv
