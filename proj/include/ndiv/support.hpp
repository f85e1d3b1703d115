#pragma once

#include <optional>
#include <vector>

#include "ndiv/interval.hpp"

namespace ndiv {

// Lazy description of infinitely many congruent positive components:
// E_j = (j*period - width/2, j*period + width/2) for j = 1, 2, 3, ...
// The center component is (-width/2, width/2).
struct PeriodicRule {
  double period;
  double width;
  bool operator==(const PeriodicRule&) const = default;
};

// Symmetric open set E = -E that contains 0, stored as the component around 0
// plus the components on the positive axis (mirrors are implied). Either a
// finite list of positives or a periodic rule generating infinitely many.
class SupportSpec {
 public:
  // Full symmetric component list: must contain a component around 0 and come
  // in mirror pairs, pairwise disjoint with positive gaps. Order-insensitive.
  static SupportSpec from_components(std::vector<Interval> components);

  // Center plus positive-axis components only; mirrors are implied.
  static SupportSpec from_center_and_positives(Interval center, std::vector<Interval> positives);

  // Infinitely many components from a periodic rule. Requires width < period
  // (disjointness) so the gaps are positive.
  static SupportSpec periodic(double period, double width);

  const Interval& center() const { return center_; }
  bool infinite() const { return rule_.has_value(); }
  const std::optional<PeriodicRule>& generator() const { return rule_; }

  // Positive-axis components of a finite spec.
  const std::vector<Interval>& positives() const;

  int k() const;                     // finite: 1 + number of positive components
  std::int64_t component_count() const;  // finite: 2k - 1
  Interval positive_component(int j) const;  // j >= 1; works for both kinds

  // Index of the component containing x: 0 for the center, +-j for mirrored
  // positives, nullopt outside the set.
  std::optional<int> component_of(double x) const;

  bool has_unbounded_component() const;

  // Supremum of |x| over the bounded components of a finite spec (grid extent).
  double max_bounded_abscissa() const;

  bool operator==(const SupportSpec&) const = default;

 private:
  SupportSpec(Interval center, std::vector<Interval> positives, std::optional<PeriodicRule> rule)
      : center_(center), positives_(std::move(positives)), rule_(rule) {}

  Interval center_;
  std::vector<Interval> positives_;
  std::optional<PeriodicRule> rule_;
};

// Validating constructor from a full symmetric component list.
SupportSpec build_support_spec(std::vector<Interval> components);

// Half the minimal component length: 2*sigma = min(center length, every
// bounded positive length). This is the widest atom half-width for which
// translated bumps fit inside each component.
double sigma_of(const SupportSpec& spec);

}  // namespace ndiv
