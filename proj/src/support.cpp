#include "ndiv/support.hpp"

#include <algorithm>
#include <cmath>

namespace ndiv {

namespace {

constexpr double kSymTol = 1e-12;

bool close(double a, double b) {
  return std::abs(a - b) <= kSymTol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Mirror-aware equality: endpoints of (a, b) against -(c, d) = (-d, -c).
bool is_mirror(const Interval& pos, const Interval& neg) {
  if (std::isinf(pos.hi)) return std::isinf(neg.lo) && close(pos.lo, -neg.hi);
  return close(pos.lo, -neg.hi) && close(pos.hi, -neg.lo);
}

void validate_layout(const Interval& center, const std::vector<Interval>& positives) {
  if (!std::isfinite(center.lo) || !std::isfinite(center.hi))
    throw spec_error("center component must be bounded");
  if (!close(center.lo, -center.hi))
    throw spec_error("center component must be symmetric around 0");
  if (!center.contains(0.0)) throw spec_error("center component must contain 0");
  double prev_hi = center.hi;
  for (std::size_t i = 0; i < positives.size(); ++i) {
    const Interval& e = positives[i];
    if (!std::isfinite(e.lo)) throw spec_error("positive components must have finite left ends");
    if (!(e.lo > prev_hi)) throw spec_error("components must be separated by positive gaps");
    if (std::isinf(e.hi) && i + 1 != positives.size())
      throw spec_error("only the outermost component may be unbounded");
    prev_hi = e.hi;
  }
}

}  // namespace

SupportSpec SupportSpec::from_center_and_positives(Interval center,
                                                   std::vector<Interval> positives) {
  std::sort(positives.begin(), positives.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  validate_layout(center, positives);
  return SupportSpec(center, std::move(positives), std::nullopt);
}

SupportSpec SupportSpec::from_components(std::vector<Interval> components) {
  if (components.empty()) throw spec_error("support needs at least one component");
  std::sort(components.begin(), components.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  auto mid = std::find_if(components.begin(), components.end(),
                          [](const Interval& e) { return e.contains(0.0); });
  if (mid == components.end()) throw spec_error("support must contain a component around 0");
  std::vector<Interval> negatives(components.begin(), mid);
  std::vector<Interval> positives(mid + 1, components.end());
  if (negatives.size() != positives.size())
    throw spec_error("support must be symmetric: unpaired components");
  for (std::size_t j = 0; j < positives.size(); ++j) {
    // negatives sorted ascending: the mirror of positives[j] sits at index (count-1-j).
    if (!is_mirror(positives[j], negatives[negatives.size() - 1 - j]))
      throw spec_error("support must be symmetric: mismatched component pair");
  }
  return from_center_and_positives(*mid, std::move(positives));
}

SupportSpec SupportSpec::periodic(double period, double width) {
  if (!(period > 0.0) || !std::isfinite(period)) throw spec_error("period must be positive");
  if (!(width > 0.0) || !(width < period))
    throw spec_error("component width must lie in (0, period)");
  return SupportSpec(Interval(-width / 2.0, width / 2.0), {}, PeriodicRule{period, width});
}

SupportSpec build_support_spec(std::vector<Interval> components) {
  return SupportSpec::from_components(std::move(components));
}

const std::vector<Interval>& SupportSpec::positives() const {
  if (rule_) throw spec_error("periodic specs have no explicit component list");
  return positives_;
}

int SupportSpec::k() const {
  if (rule_) throw spec_error("component parameter is undefined for periodic specs");
  return 1 + static_cast<int>(positives_.size());
}

std::int64_t SupportSpec::component_count() const { return 2 * static_cast<std::int64_t>(k()) - 1; }

Interval SupportSpec::positive_component(int j) const {
  if (j < 1) throw spec_error("positive component index must be >= 1");
  if (rule_) {
    const double c = static_cast<double>(j) * rule_->period;
    return Interval(c - rule_->width / 2.0, c + rule_->width / 2.0);
  }
  if (j > static_cast<int>(positives_.size())) throw spec_error("component index out of range");
  return positives_[static_cast<std::size_t>(j - 1)];
}

std::optional<int> SupportSpec::component_of(double x) const {
  if (center_.contains(x)) return 0;
  const double ax = std::abs(x);
  const int sign = x < 0.0 ? -1 : 1;
  if (rule_) {
    const auto j = static_cast<std::int64_t>(std::llround(ax / rule_->period));
    if (j >= 1 && std::abs(ax - static_cast<double>(j) * rule_->period) < rule_->width / 2.0)
      return sign * static_cast<int>(j);
    return std::nullopt;
  }
  // positives_ sorted by lo: first component with hi > ax is the only candidate.
  auto it = std::upper_bound(positives_.begin(), positives_.end(), ax,
                             [](double v, const Interval& e) { return v < e.hi; });
  if (it != positives_.end() && it->contains(ax))
    return sign * static_cast<int>(it - positives_.begin() + 1);
  return std::nullopt;
}

bool SupportSpec::has_unbounded_component() const {
  return !rule_ && !positives_.empty() && std::isinf(positives_.back().hi);
}

double SupportSpec::max_bounded_abscissa() const {
  if (rule_) throw spec_error("periodic specs have unbounded extent");
  double m = center_.hi;
  for (const Interval& e : positives_)
    if (std::isfinite(e.hi)) m = std::max(m, e.hi);
  return m;
}

double sigma_of(const SupportSpec& spec) {
  if (spec.generator()) return spec.generator()->width / 2.0;
  double min_len = spec.center().length();
  for (const Interval& e : spec.positives())
    if (std::isfinite(e.hi)) min_len = std::min(min_len, e.length());
  return min_len / 2.0;
}

}  // namespace ndiv
