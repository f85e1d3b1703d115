#include "ndiv/branch_function.hpp"

#include <algorithm>
#include <cmath>

namespace ndiv {

double pow_i(double x, int m) {
  if (m < 0) throw spec_error("negative integer power");
  double r = 1.0;
  double b = x;
  for (int e = m; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

namespace {

// Closed-support containment with a small relative slack for float endpoints.
bool fits_in(double lo, double hi, const Interval& e) {
  const double tol = 1e-9 * std::max({1.0, std::abs(e.lo), std::abs(e.hi)});
  const bool left_ok = lo >= e.lo - tol;
  const bool right_ok = std::isinf(e.hi) ? std::isfinite(lo) : hi <= e.hi + tol;
  return left_ok && right_ok;
}

void validate_center(const TranslateSum& center, const Interval& e) {
  if (center.tail()) throw spec_error("center sum cannot carry a tail");
  if (!fits_in(center.support_lo(), center.support_hi(), e))
    throw spec_error("center sum must vanish outside the center component");
  const auto& terms = center.terms();
  const std::size_t m = terms.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Term& a = terms[i];
    const Term& b = terms[m - 1 - i];  // sorted: the mirror partner sits opposite
    if (a.shift != -b.shift || a.coeff != b.coeff)
      throw spec_error("center sum must be symmetric around 0");
  }
}

}  // namespace

BranchFunction::BranchFunction(SupportSpec spec, TranslateSum center, std::vector<Branch> branches,
                               std::map<int, PhaseAngle> sparse, int power, bool)
    : spec_(std::move(spec)),
      center_(std::move(center)),
      branches_(std::move(branches)),
      sparse_(std::move(sparse)),
      power_(power) {}

BranchFunction::BranchFunction(SupportSpec spec, TranslateSum center, std::vector<Branch> branches,
                               int power)
    : BranchFunction(std::move(spec), std::move(center), std::move(branches), {}, power, true) {
  if (power_ < 1) throw spec_error("power must be >= 1");
  if (spec_.infinite())
    throw spec_error("periodic specs take the with_periodic_branches constructor");
  if (static_cast<int>(branches_.size()) != spec_.k() - 1)
    throw spec_error("need exactly one branch per positive component");
  validate_center(center_, spec_.center());
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    const Branch& b = branches_[i];
    const int j = static_cast<int>(i) + 1;
    const Interval e = spec_.positive_component(j);
    if (!(b.scale > 0.0) || !std::isfinite(b.scale))
      throw spec_error("branch scales must be positive");
    if (!(b.shape.atom() == center_.atom()))
      throw spec_error("all branches must share the center atom");
    if (b.shape.tail() && !std::isinf(e.hi))
      throw spec_error("geometric tails require an unbounded component");
    if (!fits_in(b.shape.support_lo(), b.shape.support_hi(), e))
      throw spec_error("branch shape must vanish outside its component");
    if (const auto* prof = std::get_if<PhaseProfile>(&b.phase); prof && prof->component != j)
      throw spec_error("phase profile attached to the wrong component");
  }
}

BranchFunction BranchFunction::with_periodic_branches(SupportSpec spec, TranslateSum center,
                                                      std::map<int, PhaseAngle> phases,
                                                      int power) {
  if (power < 1) throw spec_error("power must be >= 1");
  if (!spec.infinite()) throw spec_error("finite specs take the branch-list constructor");
  validate_center(center, spec.center());
  if (!(center.atom().half_width == spec.generator()->width / 2.0))
    throw spec_error("atom half-width must be half the component width");
  std::erase_if(phases, [](const auto& kv) { return kv.second.is_zero(); });
  if (!phases.empty() && phases.begin()->first < 1)
    throw spec_error("phase map keys are positive component indices");
  return BranchFunction(std::move(spec), std::move(center), {}, std::move(phases), power, true);
}

bool BranchFunction::exact_phases() const {
  return std::all_of(branches_.begin(), branches_.end(), [](const Branch& b) {
    return std::holds_alternative<PhaseAngle>(b.phase);
  });
}

const std::vector<Branch>& BranchFunction::branches() const {
  if (periodic()) throw spec_error("periodic branches are synthesized; use branch(j)");
  return branches_;
}

Branch BranchFunction::branch(int j) const {
  if (j < 1) throw spec_error("branch index must be >= 1");
  if (!periodic()) {
    if (j > static_cast<int>(branches_.size())) throw spec_error("branch index out of range");
    return branches_[static_cast<std::size_t>(j - 1)];
  }
  const PeriodicRule& rule = *spec_.generator();
  const double scale = std::ldexp(1.0, -j) / rule.width;
  TranslateSum shape(center_.atom(), {{1.0, static_cast<double>(j) * rule.period}});
  const auto it = sparse_.find(j);
  return Branch{scale, std::move(shape), it == sparse_.end() ? PhaseAngle() : it->second};
}

const std::map<int, PhaseAngle>& BranchFunction::sparse_phases() const {
  if (!periodic()) throw spec_error("sparse phases exist only for periodic specs");
  return sparse_;
}

std::complex<double> BranchFunction::positive_branch_value(int j, double x) const {
  double scale, mod;
  double angle;
  if (periodic()) {
    const PeriodicRule& rule = *spec_.generator();
    scale = std::ldexp(1.0, -j) / rule.width;
    mod = center_.atom()(x - static_cast<double>(j) * rule.period);
    const auto it = sparse_.find(j);
    angle = it == sparse_.end() ? 0.0 : it->second.radians();
  } else {
    const Branch& b = branches_[static_cast<std::size_t>(j - 1)];
    scale = b.scale;
    mod = b.shape.eval(x);
    angle = std::holds_alternative<PhaseAngle>(b.phase)
                ? std::get<PhaseAngle>(b.phase).radians()
                : std::get<PhaseProfile>(b.phase).value_at(x);
  }
  const double r = pow_i(scale, power_) * pow_i(mod, power_);
  if (angle == 0.0) return {r, 0.0};
  return std::polar(r, angle);
}

std::complex<double> BranchFunction::eval(double x) const {
  const auto c = spec_.component_of(x);
  if (!c) return {0.0, 0.0};
  if (*c == 0) return {pow_i(center_.eval(x), power_), 0.0};
  if (*c > 0) return positive_branch_value(*c, x);
  return std::conj(positive_branch_value(-*c, -x));
}

double BranchFunction::value_at_zero() const { return pow_i(center_.eval(0.0), power_); }

BranchFunction BranchFunction::powered(int m) const {
  if (m < 1) throw spec_error("power factor must be >= 1");
  if (periodic()) {
    std::map<int, PhaseAngle> phases;
    for (const auto& [j, a] : sparse_) {
      PhaseAngle scaled = a.times(m);
      if (!scaled.is_zero()) phases.emplace(j, scaled);
    }
    return BranchFunction(spec_, center_, {}, std::move(phases), power_ * m, true);
  }
  std::vector<Branch> branches = branches_;
  for (Branch& b : branches) {
    if (auto* angle = std::get_if<PhaseAngle>(&b.phase)) {
      b.phase = angle->times(m);
    } else {
      auto& prof = std::get<PhaseProfile>(b.phase);
      for (double& a : prof.angles) a *= static_cast<double>(m);
    }
  }
  return BranchFunction(spec_, center_, std::move(branches), sparse_, power_ * m, true);
}

std::complex<double> eval_branch(const BranchFunction& f, double x) { return f.eval(x); }

}  // namespace ndiv
