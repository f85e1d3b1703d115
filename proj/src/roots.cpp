#include "ndiv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>

#include "ndiv/gram.hpp"
#include "ndiv/kernels.hpp"

namespace ndiv {

PhaseVector PhaseVector::zeros(int n, int len) {
  if (n < 2) throw spec_error("phase modulus must be >= 2");
  if (len < 0) throw spec_error("phase vector length must be >= 0");
  return PhaseVector{n, std::vector<int>(static_cast<std::size_t>(len), 0)};
}

int PhaseVector::entry(int j) const {
  if (j < 1) throw spec_error("component index must be >= 1");
  if (j > static_cast<int>(entries.size())) return 0;
  return entries[static_cast<std::size_t>(j - 1)];
}

int PhaseVector::max_support() const {
  for (int j = static_cast<int>(entries.size()); j >= 1; --j)
    if (entries[static_cast<std::size_t>(j - 1)] != 0) return j;
  return 0;
}

std::int64_t root_count_bound(int n, int k) {
  if (n < 2 || k < 1) throw spec_error("bound needs n >= 2 and k >= 1");
  std::int64_t r = 1;
  for (int i = 1; i < k; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / n)
      return std::numeric_limits<std::int64_t>::max();
    r *= n;
  }
  return r;
}

namespace {

void validate_pv(const PhaseVector& pv) {
  if (pv.n < 2) throw spec_error("phase modulus must be >= 2");
  for (int p : pv.entries)
    if (p < 0 || p >= pv.n) throw spec_error("phase entries must lie in [0, n)");
}

BranchPhase root_phase(const BranchPhase& phase, int p, int n) {
  if (const auto* angle = std::get_if<PhaseAngle>(&phase)) return angle->root_branch(p, n);
  PhaseProfile prof = std::get<PhaseProfile>(phase);
  const double offset = 2.0 * std::numbers::pi * static_cast<double>(p);
  for (double& a : prof.angles) a = (a + offset) / static_cast<double>(n);
  return prof;
}

}  // namespace

BranchFunction root_candidate(const BranchFunction& f, const PhaseVector& pv) {
  validate_pv(pv);
  const int n = pv.n;
  if (f.power() % n != 0)
    throw spec_error("root order must divide the power of the branch representation");
  const int g_power = f.power() / n;

  if (f.periodic()) {
    std::map<int, PhaseAngle> phases;
    for (const auto& [j, angle] : f.sparse_phases())
      phases.emplace(j, angle.root_branch(pv.entry(j), n));
    for (std::size_t i = 0; i < pv.entries.size(); ++i) {
      const int j = static_cast<int>(i) + 1;
      if (pv.entries[i] != 0 && !phases.count(j))
        phases.emplace(j, PhaseAngle().root_branch(pv.entries[i], n));
    }
    return BranchFunction::with_periodic_branches(f.spec(), f.center(), std::move(phases),
                                                  g_power);
  }

  const int k = f.spec().k();
  if (static_cast<int>(pv.entries.size()) != k - 1)
    throw spec_error("phase vector needs one entry per positive component");
  std::vector<Branch> branches = f.branches();
  for (std::size_t i = 0; i < branches.size(); ++i)
    branches[i].phase = root_phase(branches[i].phase, pv.entries[i], n);
  return BranchFunction(f.spec(), f.center(), std::move(branches), g_power);
}

bool verify_root(const BranchFunction& g, const BranchFunction& f, int n, double tol) {
  if (n < 1) throw spec_error("root order must be >= 1");
  int window = 8;
  if (f.periodic()) {
    int far = 0;
    for (const auto& [j, angle] : f.sparse_phases()) far = std::max(far, j);
    for (const auto& [j, angle] : g.sparse_phases()) far = std::max(far, j);
    window = std::max(window, far + 2);
  }
  const std::vector<double> grid = union_grid(f, g, 64.0, window);
  const double residual = max_pow_residual(g, f, n, grid).value;
  return residual <= tol * std::max(1.0, f.value_at_zero());
}

std::vector<PhaseVector> graded_phase_vectors(int n, std::int64_t count) {
  if (n < 2) throw spec_error("phase modulus must be >= 2");
  if (count < 0) throw spec_error("vector count must be >= 0");
  std::vector<PhaseVector> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 0) return out;
  out.push_back(PhaseVector{n, {}});
  // Grade d: vectors of length d with a nonzero last entry, in lexicographic
  // order (leading entry most significant).
  for (int d = 1; static_cast<std::int64_t>(out.size()) < count; ++d) {
    std::vector<int> v(static_cast<std::size_t>(d), 0);
    v.back() = 1;
    while (static_cast<std::int64_t>(out.size()) < count) {
      out.push_back(PhaseVector{n, v});
      // Odometer increment skipping vectors whose last entry is zero.
      int pos = d - 1;
      while (pos >= 0) {
        if (++v[static_cast<std::size_t>(pos)] < n) break;
        v[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;  // grade exhausted
      if (v.back() == 0) v.back() = 1;
    }
  }
  return out;
}

namespace {

struct VerifyContext {
  double resid_tol;
  double grid_step;
  double t_max;
  std::vector<double> grid;
};

PsdVerdict pd_check_candidate(const BranchFunction& g, const RootOptions& opts,
                              const VerifyContext& ctx, std::mt19937& rng) {
  if (g.power() == 1 && g.exact_phases()) {
    const CosineSpectrum s = spectrum_of(g);
    const double step = ctx.grid_step > 0.0 ? ctx.grid_step : default_bochner_step(s);
    const double tmax = ctx.t_max > 0.0 ? ctx.t_max : default_bochner_tmax(s);
    return bochner_check(s, step, tmax);
  }
  return gram_psd_search(g, rng, opts.gram_trials);
}

}  // namespace

RootSet enumerate_roots(const BranchFunction& f, int n, const RootOptions& opts) {
  if (n < 2) throw spec_error("root order must be >= 2");
  if (opts.cap < 1) throw spec_error("cap must be >= 1");
  if (!(opts.tol > 0.0)) throw spec_error("tolerance must be positive");
  if (f.power() % n != 0)
    throw spec_error("root order must divide the power of the branch representation");

  VerifyContext ctx;
  ctx.resid_tol = opts.tol * std::max(1.0, f.value_at_zero());
  ctx.grid_step = opts.grid_step;
  ctx.t_max = opts.t_max;
  std::mt19937 rng(opts.seed);

  RootSet rs;
  rs.n = n;

  if (f.periodic()) {
    rs.k = std::nullopt;
    rs.bound = -1;  // infinitely many admissible phase vectors
    const std::vector<PhaseVector> pvs = graded_phase_vectors(n, opts.cap);
    for (const PhaseVector& pv : pvs) {
      BranchFunction g = root_candidate(f, pv);
      const int window = std::max(opts.window_components, pv.max_support() + 2);
      ctx.grid = default_grid(f, opts.per_unit, window);
      const PsdVerdict verdict = pd_check_candidate(g, opts, ctx, rng);
      if (!verdict.passed) continue;
      if (max_pow_residual(g, f, n, ctx.grid).value > ctx.resid_tol) continue;
      rs.roots.push_back({pv, std::move(g), verdict});
    }
    return rs;
  }

  const int k = f.spec().k();
  rs.k = k;
  rs.bound = root_count_bound(n, k);
  if (rs.bound > opts.cap)
    throw cap_error("enumeration needs a cap of at least " + std::to_string(rs.bound) +
                    " candidates (n^(k-1)); rerun with a larger cap");
  ctx.grid = default_grid(f, opts.per_unit);

  // Candidates in colexicographic order: the first component varies fastest.
  for (std::int64_t idx = 0; idx < rs.bound; ++idx) {
    PhaseVector pv = PhaseVector::zeros(n, k - 1);
    std::int64_t rem = idx;
    for (int j = 0; j < k - 1; ++j) {
      pv.entries[static_cast<std::size_t>(j)] = static_cast<int>(rem % n);
      rem /= n;
    }
    BranchFunction g = root_candidate(f, pv);
    const PsdVerdict verdict = pd_check_candidate(g, opts, ctx, rng);
    if (!verdict.passed) continue;
    if (max_pow_residual(g, f, n, ctx.grid).value > ctx.resid_tol) continue;
    rs.roots.push_back({pv, std::move(g), verdict});
  }
  return rs;
}

PhaseProfile phase_extract(std::span<const double> xs, std::span<const std::complex<double>> values,
                           int component, double floor_scale) {
  if (xs.size() != values.size()) throw spec_error("sample arrays must have equal length");
  if (xs.size() < 2) throw spec_error("need at least two samples to extract a phase");
  if (!(floor_scale > 0.0)) throw spec_error("floor scale must be positive");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1])) throw spec_error("sample abscissas must be strictly increasing");

  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const double threshold = 1e-9 * floor_scale;
  std::vector<double> angles(xs.size(), 0.0);
  std::vector<bool> reliable(xs.size(), false);

  double prev = 0.0;
  bool have_prev = false;
  int gap = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (std::abs(values[i]) <= threshold) {
      if (have_prev && ++gap > 3)
        throw spec_error("modulus vanishes over too wide a window to connect the phase");
      continue;
    }
    gap = 0;
    double a = std::arg(values[i]);
    if (have_prev) a += kTwoPi * std::round((prev - a) / kTwoPi);  // unwrap near prev
    angles[i] = a;
    reliable[i] = true;
    prev = a;
    have_prev = true;
  }
  if (!have_prev) throw spec_error("all samples below the modulus floor");

  // Fill unreliable samples: clamp at the ends, interpolate interior gaps.
  std::size_t first = 0;
  while (!reliable[first]) ++first;
  std::size_t last = xs.size() - 1;
  while (!reliable[last]) --last;
  for (std::size_t i = 0; i < first; ++i) angles[i] = angles[first];
  for (std::size_t i = last + 1; i < xs.size(); ++i) angles[i] = angles[last];
  for (std::size_t i = first + 1; i < last; ++i) {
    if (reliable[i]) continue;
    std::size_t r = i;
    while (!reliable[r]) ++r;
    const std::size_t l = i - 1;
    for (std::size_t m = i; m < r; ++m) {
      const double w = (xs[m] - xs[l]) / (xs[r] - xs[l]);
      angles[m] = angles[l] + w * (angles[r] - angles[l]);
    }
    i = r;
  }
  return PhaseProfile{component, std::vector<double>(xs.begin(), xs.end()), std::move(angles)};
}

int distinct_count(const RootSet& rs) {
  std::set<std::vector<int>> seen;
  for (const RootEntry& e : rs.roots) {
    std::vector<int> key = e.pv.entries;
    while (!key.empty() && key.back() == 0) key.pop_back();
    seen.insert(std::move(key));
  }
  return static_cast<int>(seen.size());
}

int distinct_count(const std::vector<BranchFunction>& gs, std::span<const double> xs, double tol) {
  std::vector<std::vector<std::complex<double>>> reps;
  for (const BranchFunction& g : gs) {
    std::vector<std::complex<double>> vals = eval_grid_serial(g, xs);
    const bool dup = std::any_of(reps.begin(), reps.end(), [&](const auto& r) {
      for (std::size_t i = 0; i < vals.size(); ++i)
        if (std::abs(vals[i] - r[i]) > tol) return false;
      return true;
    });
    if (!dup) reps.push_back(std::move(vals));
  }
  return static_cast<int>(reps.size());
}

}  // namespace ndiv
