#include "ndiv/translate_sum.hpp"

#include <algorithm>
#include <cmath>

#include "ndiv/interval.hpp"

namespace ndiv {

GeometricTail tail_knots(double a, double sigma, double ratio) {
  if (!std::isfinite(a)) throw spec_error("tail anchor must be finite");
  if (!(sigma > 0.0)) throw spec_error("tail spacing must be positive");
  if (!(ratio > 0.0 && ratio < 1.0)) throw spec_error("tail ratio must lie in (0, 1)");
  return GeometricTail{a, sigma, ratio};
}

TranslateSum::TranslateSum(Atom atom, std::vector<Term> terms, std::optional<GeometricTail> tail)
    : atom_(atom), terms_(std::move(terms)), tail_(tail) {
  for (const Term& t : terms_) {
    if (!(t.coeff > 0.0) || !std::isfinite(t.coeff))
      throw spec_error("translate coefficients must be positive");
    if (!std::isfinite(t.shift)) throw spec_error("translate shifts must be finite");
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.shift < b.shift; });
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].shift == terms_[i - 1].shift) throw spec_error("duplicate translate shifts");
  if (tail_) {
    tail_knots(tail_->base, tail_->spacing, tail_->ratio);  // revalidate fields
    if (!terms_.empty() && terms_.back().shift >= tail_->shift(1))
      throw spec_error("explicit translates must lie left of the tail");
  }
  if (terms_.empty() && !tail_) throw spec_error("translate sum needs at least one knot");
}

namespace {

// Tail knot indices r with |x - shift(r)| < half_width, i.e. r in the open
// interval ((x - base - hw)/spacing, (x - base + hw)/spacing), clamped to >= 1.
struct TailRange {
  std::int64_t first, last;  // inclusive; empty when first > last
};

TailRange tail_range(const GeometricTail& tail, double half_width, double x) {
  const double lo = (x - tail.base - half_width) / tail.spacing;
  const double hi = (x - tail.base + half_width) / tail.spacing;
  std::int64_t first = static_cast<std::int64_t>(std::floor(lo)) + 1;
  std::int64_t last = static_cast<std::int64_t>(std::ceil(hi)) - 1;
  if (first < 1) first = 1;
  // Open-interval boundary: floor/ceil land on the endpoint when it is integral.
  while (static_cast<double>(first) <= lo) ++first;
  while (static_cast<double>(last) >= hi) --last;
  return {first, last};
}

}  // namespace

double TranslateSum::eval(double x) const {
  const double hw = atom_.half_width;
  double sum = 0.0;
  // Only terms with shift in (x - hw, x + hw) contribute; terms_ is sorted.
  auto it = std::lower_bound(terms_.begin(), terms_.end(), x - hw,
                             [](const Term& t, double v) { return t.shift <= v; });
  for (; it != terms_.end() && it->shift < x + hw; ++it) sum += it->coeff * atom_(x - it->shift);
  if (tail_) {
    const TailRange r = tail_range(*tail_, hw, x);
    for (std::int64_t i = r.first; i <= r.last; ++i)
      sum += tail_->weight(i) * atom_(x - tail_->shift(i));
  }
  return sum;
}

int TranslateSum::terms_touched(double x) const {
  const double hw = atom_.half_width;
  int count = 0;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), x - hw,
                             [](const Term& t, double v) { return t.shift <= v; });
  for (; it != terms_.end() && it->shift < x + hw; ++it) ++count;
  if (tail_) {
    const TailRange r = tail_range(*tail_, hw, x);
    if (r.last >= r.first) count += static_cast<int>(r.last - r.first + 1);
  }
  return count;
}

double TranslateSum::support_lo() const {
  double lo = tail_ ? tail_->shift(1) - atom_.half_width : kInf;
  if (!terms_.empty()) lo = std::min(lo, terms_.front().shift - atom_.half_width);
  return lo;
}

double TranslateSum::support_hi() const {
  if (tail_) return kInf;
  return terms_.back().shift + atom_.half_width;
}

double eval_translate_sum(const TranslateSum& u, double x) { return u.eval(x); }

}  // namespace ndiv
