#include "ndiv/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ndiv/kernels.hpp"

namespace ndiv {

namespace {

constexpr double kPi = std::numbers::pi;

// Knot count after which a geometric tail's remaining mass drops below 1e-14.
std::int64_t tail_cutoff(double ratio) {
  return static_cast<std::int64_t>(std::ceil(-14.0 * std::numbers::ln10 / std::log1p(-ratio)));
}

}  // namespace

double atom_inverse_transform(const Atom& atom, double t) {
  const double sigma = atom.half_width;
  if (atom.alpha == 1.0) {
    const double s = sigma * t;
    if (std::abs(s) < 1e-4) {
      // Series for (1 - cos s)/s^2 around 0; keeps full precision through s = 0.
      const double s2 = s * s;
      return (sigma / kPi) * (0.5 - s2 / 24.0 + s2 * s2 / 720.0 - s2 * s2 * s2 / 40320.0);
    }
    const double h = std::sin(0.5 * s);
    return (sigma / kPi) * 2.0 * h * h / (s * s);
  }
  if (atom.alpha < 1.0)
    throw spec_error("inverse transform positivity requires atom exponent >= 1");
  const double alpha = atom.alpha;
  auto integrand = [alpha, sigma, t](double y) {
    return std::pow(1.0 - y, alpha) * std::cos(t * sigma * y);
  };
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, 1.0, 15, 1e-14);
  return (sigma / kPi) * integral;
}

CosineSpectrum::CosineSpectrum(Atom atom, double constant, std::vector<CosTerm> terms,
                               std::vector<CosTail> tails, double remainder)
    : atom_(atom),
      constant_(constant),
      terms_(std::move(terms)),
      tails_(std::move(tails)),
      remainder_(remainder) {
  if (!std::isfinite(constant_)) throw spec_error("spectrum constant must be finite");
  if (!(remainder_ >= 0.0)) throw spec_error("spectrum remainder must be nonnegative");
  for (const CosTerm& c : terms_)
    if (!std::isfinite(c.coeff) || !std::isfinite(c.freq) || !std::isfinite(c.phase))
      throw spec_error("spectrum lines must be finite");
  for (const CosTail& tl : tails_) {
    if (!(tl.ratio > 0.0 && tl.ratio < 1.0)) throw spec_error("tail ratio must lie in (0, 1)");
    if (!(tl.spacing > 0.0)) throw spec_error("tail spacing must be positive");
    if (!std::isfinite(tl.scale) || !std::isfinite(tl.base) || !std::isfinite(tl.phase))
      throw spec_error("tail lines must be finite");
  }
}

double CosineSpectrum::bracket(double t) const {
  double sum = constant_;
  for (const CosTerm& c : terms_) sum += c.coeff * std::cos(c.freq * t + c.phase);
  for (const CosTail& tl : tails_) {
    const std::int64_t cutoff = tail_cutoff(tl.ratio);
    double w = tl.ratio;
    double acc = 0.0;
    for (std::int64_t r = 1; r <= cutoff; ++r) {
      acc += w * std::cos((tl.base + static_cast<double>(r) * tl.spacing) * t + tl.phase);
      w *= 1.0 - tl.ratio;
    }
    sum += tl.scale * acc;
  }
  return sum;
}

double CosineSpectrum::value(double t) const {
  return 2.0 * atom_inverse_transform(atom_, t) * bracket(t);
}

double CosineSpectrum::max_frequency() const {
  double f = 0.0;
  for (const CosTerm& c : terms_) f = std::max(f, std::abs(c.freq));
  for (const CosTail& tl : tails_)
    f = std::max(f, std::abs(tl.base) + static_cast<double>(tail_cutoff(tl.ratio)) * tl.spacing);
  return f;
}

CosineSpectrum spectrum_of(const BranchFunction& u) {
  if (u.power() != 1)
    throw spec_error("line spectrum exists for generators (power 1) only");
  if (!u.exact_phases())
    throw spec_error("line spectrum requires exact rational phases");

  const Atom& atom = u.atom();
  double constant = 0.0;
  std::vector<CosTerm> terms;
  std::vector<CosTail> tails;
  double remainder = 0.0;

  // Center translates: the zero knot carries half its coefficient into the
  // factored constant, each mirrored pair becomes one cosine line.
  for (const Term& tm : u.center().terms()) {
    if (tm.shift == 0.0)
      constant += 0.5 * tm.coeff;
    else if (tm.shift > 0.0)
      terms.push_back({tm.coeff, tm.shift, 0.0});
  }

  // A branch with phase theta and its conjugate mirror give, per knot tau,
  // the line scale * coeff * cos(tau t - theta).
  auto add_branch = [&](const Branch& b) {
    const double theta = std::get<PhaseAngle>(b.phase).radians();
    for (const Term& tm : b.shape.terms())
      terms.push_back({b.scale * tm.coeff, tm.shift, -theta});
    if (b.shape.tail()) {
      const GeometricTail& tl = *b.shape.tail();
      tails.push_back({b.scale, tl.base, tl.spacing, tl.ratio, -theta});
    }
  };

  if (u.periodic()) {
    const auto& phases = u.sparse_phases();
    const int last_key = phases.empty() ? 0 : phases.rbegin()->first;
    const int cutoff = std::max(50, last_key + 5);
    for (int j = 1; j <= cutoff; ++j) add_branch(u.branch(j));
    // Mass of the dropped branches: sum_{j > cutoff} 2^-j / width.
    remainder = std::ldexp(1.0, -cutoff) / u.spec().generator()->width;
  } else {
    for (const Branch& b : u.branches()) add_branch(b);
  }
  return CosineSpectrum(atom, constant, std::move(terms), std::move(tails), remainder);
}

double bracket_lower_bound(const CosineSpectrum& s) {
  double mass = 0.0;
  for (const CosTerm& c : s.terms()) mass += std::abs(c.coeff);
  for (const CosTail& tl : s.tails()) mass += std::abs(tl.scale);  // weights sum to 1
  return s.constant() - mass - s.remainder();
}

double default_bochner_tmax(const CosineSpectrum& s) { return 50.0 / s.atom().half_width; }

double default_bochner_step(const CosineSpectrum& s) {
  const double f = s.max_frequency();
  if (f <= 0.0) return 0.01;
  return std::min(0.01, kPi / (10.0 * f));
}

PsdVerdict bochner_check(const CosineSpectrum& s, double grid_step, double t_max) {
  if (!(grid_step > 0.0)) throw spec_error("grid step must be positive");
  if (!(t_max > 0.0)) throw spec_error("scan end must be positive");
  if (bracket_lower_bound(s) > 0.0) return {true, PsdPath::analytic, std::nullopt};
  const GridPoint worst = min_bracket_scan(s, 0.0, t_max, grid_step);
  if (worst.value >= -1e-12) return {true, PsdPath::grid, std::nullopt};
  return {false, PsdPath::grid, PsdWitness{{worst.at}, worst.value}};
}

PsdVerdict bochner_check(const CosineSpectrum& s) {
  return bochner_check(s, default_bochner_step(s), default_bochner_tmax(s));
}

}  // namespace ndiv
