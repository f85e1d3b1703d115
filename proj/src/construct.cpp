#include "ndiv/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ndiv {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_params(const ConstructionParams& p) {
  if (!(p.atom_alpha >= 1.0 && p.atom_alpha <= 2.0))
    throw spec_error("atom exponent must lie in [1, 2]");
  if (!(p.knot_margin > 0.0 && p.knot_margin < 1.0))
    throw spec_error("knot margin must lie in (0, 1)");
  if (!(p.omega0_margin >= 1.0)) throw spec_error("center weight margin must be >= 1");
  if (!(p.tail_ratio > 0.0 && p.tail_ratio < 1.0))
    throw spec_error("tail ratio must lie in (0, 1)");
  for (double s : p.scales)
    if (!(s > 0.0) || !std::isfinite(s)) throw spec_error("explicit scales must be positive");
  for (double w : p.center_weights)
    if (!(w > 0.0) || !std::isfinite(w))
      throw spec_error("explicit center weights must be positive");
}

// Uniform fill of [lo, hi] with at most margin*2*sigma spacing; both endpoints
// are taken exactly (no accumulated rounding at the far end).
std::vector<double> uniform_fill(double lo, double hi, double sigma, double margin) {
  const double span = hi - lo;
  if (span == 0.0) return {lo};
  const auto steps = static_cast<std::int64_t>(std::ceil(span / (margin * 2.0 * sigma)));
  std::vector<double> knots;
  knots.reserve(static_cast<std::size_t>(steps) + 1);
  for (std::int64_t i = 0; i < steps; ++i)
    knots.push_back(lo + static_cast<double>(i) * span / static_cast<double>(steps));
  knots.push_back(hi);
  return knots;
}

// Everything choose_omega0 and build_generator share: knot layout, weights,
// scales, and the total absolute cosine-line mass of the resulting spectrum.
struct Layout {
  double sigma = 0.0;
  std::vector<double> center;           // {0, -d, ...}; interior knots after the first
  std::vector<double> weights;          // one per interior center knot
  std::vector<double> scales;           // alpha_j per positive component (finite specs)
  std::vector<std::vector<double>> knots;  // knots per bounded positive component
  double line_mass = 0.0;
};

Layout plan_layout(const SupportSpec& spec, const ConstructionParams& p) {
  validate_params(p);
  Layout lay;
  lay.sigma = sigma_of(spec);
  lay.center = center_knots(spec.center().hi, lay.sigma, p.knot_margin);
  const std::size_t interior = lay.center.size() - 1;
  if (!p.center_weights.empty() && p.center_weights.size() != interior)
    throw spec_error("need one center weight per interior knot");
  lay.weights = p.center_weights.empty() ? std::vector<double>(interior, 1.0) : p.center_weights;
  double mass = 0.0;
  for (double w : lay.weights) mass += w;

  if (spec.infinite()) {
    if (!p.scales.empty())
      throw spec_error("periodic specs use the built-in scale rule");
    mass += 1.0 / (2.0 * lay.sigma);  // sum over all synthesized branches
  } else {
    const int k = spec.k();
    if (!p.scales.empty() && static_cast<int>(p.scales.size()) != k - 1)
      throw spec_error("need one scale per positive component");
    for (int j = 1; j < k; ++j) {
      const Interval e = spec.positive_component(j);
      const bool bounded = std::isfinite(e.hi);
      std::vector<double> knots =
          bounded ? knots_for_interval(e, lay.sigma, p.knot_margin) : std::vector<double>{};
      const double m_j = bounded ? static_cast<double>(knots.size()) : 1.0;  // tail mass is 1
      double alpha;
      if (!p.scales.empty()) {
        alpha = p.scales[static_cast<std::size_t>(j - 1)];
      } else if (p.scale_rule == ScaleRule::dyadic) {
        alpha = std::ldexp(1.0, -j);
      } else {
        if (!bounded)
          throw spec_error("length-normalized scales need bounded components");
        alpha = std::ldexp(1.0, -j) / (m_j * e.length());
      }
      mass += alpha * m_j;
      lay.scales.push_back(alpha);
      lay.knots.push_back(std::move(knots));
    }
  }
  lay.line_mass = mass;
  return lay;
}

}  // namespace

std::vector<double> knots_for_interval(const Interval& e, double sigma, double margin) {
  if (!e.bounded()) throw spec_error("knot fill needs a bounded component");
  if (!(sigma > 0.0)) throw spec_error("sigma must be positive");
  if (!(margin > 0.0 && margin < 1.0)) throw spec_error("knot margin must lie in (0, 1)");
  if (e.length() < 2.0 * sigma) throw spec_error("component shorter than the atom diameter");
  return uniform_fill(e.lo + sigma, e.hi - sigma, sigma, margin);
}

std::vector<double> center_knots(double b0, double sigma, double margin) {
  if (!(sigma > 0.0) || !(b0 >= sigma)) throw spec_error("center must cover the atom");
  if (!(margin > 0.0 && margin < 1.0)) throw spec_error("knot margin must lie in (0, 1)");
  std::vector<double> knots = uniform_fill(-(b0 - sigma), 0.0, sigma, margin);
  std::reverse(knots.begin(), knots.end());  // {0, -d, ..., -(b0 - sigma)}
  return knots;
}

double choose_omega0(const SupportSpec& spec, const ConstructionParams& p) {
  const Layout lay = plan_layout(spec, p);
  if (lay.line_mass == 0.0) return 0.5;  // center-only: any positive weight works
  return p.omega0_margin * lay.line_mass;
}

BranchFunction build_generator(const SupportSpec& spec, const ConstructionParams& p) {
  const Layout lay = plan_layout(spec, p);
  const double omega0 = lay.line_mass == 0.0 ? 0.5 : p.omega0_margin * lay.line_mass;
  const Atom atom(p.atom_alpha, lay.sigma);

  std::vector<Term> center_terms;
  center_terms.push_back({2.0 * omega0, 0.0});
  for (std::size_t i = 1; i < lay.center.size(); ++i) {
    const double w = lay.weights[i - 1];
    center_terms.push_back({w, lay.center[i]});
    center_terms.push_back({w, -lay.center[i]});
  }
  TranslateSum center(atom, std::move(center_terms));

  if (spec.infinite()) return BranchFunction::with_periodic_branches(spec, center, {}, 1);

  std::vector<Branch> branches;
  for (int j = 1; j < spec.k(); ++j) {
    const Interval e = spec.positive_component(j);
    const double alpha = lay.scales[static_cast<std::size_t>(j - 1)];
    if (std::isfinite(e.hi)) {
      std::vector<Term> terms;
      for (double tau : lay.knots[static_cast<std::size_t>(j - 1)]) terms.push_back({1.0, tau});
      branches.push_back({alpha, TranslateSum(atom, std::move(terms)), PhaseAngle()});
    } else {
      branches.push_back(
          {alpha, TranslateSum(atom, {}, tail_knots(e.lo, lay.sigma, p.tail_ratio)), PhaseAngle()});
    }
  }
  return BranchFunction(spec, center, std::move(branches), 1);
}

BranchFunction construct_f(const SupportSpec& spec, int n, const ConstructionParams& p) {
  if (n < 2) throw spec_error("divisibility order must be >= 2");
  return build_generator(spec, p).powered(n);
}

BranchFunction example_f1(int n) {
  if (n < 2) throw spec_error("divisibility order must be >= 2");
  SupportSpec spec = SupportSpec::from_center_and_positives(
      Interval(-1.0, 1.0), {Interval(kPi, 2.0 * kPi), Interval(10.0, 15.0)});
  const Atom atom(1.0, 1.0);
  TranslateSum center(atom, {{1.0, 0.0}});
  std::vector<Branch> branches;
  branches.push_back(
      {0.125, TranslateSum(atom, {{1.0, kPi + 1.0}, {1.0, 2.0 * kPi - 1.0}}), PhaseAngle()});
  branches.push_back(
      {0.0625, TranslateSum(atom, {{1.0, 11.0}, {1.0, 12.0}, {1.0, 13.0}, {1.0, 14.0}}),
       PhaseAngle()});
  return BranchFunction(std::move(spec), std::move(center), std::move(branches), n);
}

BranchFunction example_f2(int n, double a) {
  if (n < 2) throw spec_error("divisibility order must be >= 2");
  if (!(a > 15.0) || !std::isfinite(a))
    throw spec_error("tail component must start right of 15");
  SupportSpec spec = SupportSpec::from_center_and_positives(
      Interval(-1.0, 1.0),
      {Interval(kPi, 2.0 * kPi), Interval(10.0, 15.0), Interval(a, kInf)});
  const Atom atom(1.0, 1.0);
  TranslateSum center(atom, {{1.0, 0.0}});
  std::vector<Branch> branches;
  branches.push_back(
      {0.125, TranslateSum(atom, {{1.0, kPi + 1.0}, {1.0, 2.0 * kPi - 1.0}}), PhaseAngle()});
  branches.push_back(
      {0.0625, TranslateSum(atom, {{1.0, 11.0}, {1.0, 12.0}, {1.0, 13.0}, {1.0, 14.0}}),
       PhaseAngle()});
  branches.push_back({0.25, TranslateSum(atom, {}, tail_knots(a, 1.0, 0.5)), PhaseAngle()});
  return BranchFunction(std::move(spec), std::move(center), std::move(branches), n);
}

}  // namespace ndiv
