#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "ndiv/atom.hpp"

namespace ndiv {

// One weighted translate: coeff * atom(x - shift).
struct Term {
  double coeff;
  double shift;
  bool operator==(const Term&) const = default;
};

// Infinite knot family marching right from `base` in steps of `spacing`, with
// geometrically decaying weights ratio*(1-ratio)^(r-1) for r = 1, 2, ...
// The weights sum to exactly 1.
struct GeometricTail {
  double base;
  double spacing;
  double ratio;

  double shift(std::int64_t r) const { return base + static_cast<double>(r) * spacing; }
  double weight(std::int64_t r) const {
    return ratio * std::pow(1.0 - ratio, static_cast<double>(r - 1));
  }

  bool operator==(const GeometricTail&) const = default;
};

// Tail whose r-th knot sits at a + r*sigma with weight ratio*(1-ratio)^(r-1),
// so the summed bumps cover (a, inf) with total mass 1.
GeometricTail tail_knots(double a, double sigma, double ratio = 0.5);

// Locally finite weighted sum of translated atoms, plus an optional geometric
// tail. Evaluation only touches the O(1) terms whose bumps overlap x.
class TranslateSum {
 public:
  TranslateSum(Atom atom, std::vector<Term> terms,
               std::optional<GeometricTail> tail = std::nullopt);

  const Atom& atom() const { return atom_; }
  const std::vector<Term>& terms() const { return terms_; }  // sorted by shift
  const std::optional<GeometricTail>& tail() const { return tail_; }

  double eval(double x) const;

  // Number of knots (explicit terms plus tail knots) whose bump is nonzero at x.
  int terms_touched(double x) const;

  // Infimum / supremum of the closed support. support_hi() is +inf with a tail.
  double support_lo() const;
  double support_hi() const;

  bool operator==(const TranslateSum&) const = default;

 private:
  Atom atom_;
  std::vector<Term> terms_;
  std::optional<GeometricTail> tail_;
};

double eval_translate_sum(const TranslateSum& u, double x);

}  // namespace ndiv
