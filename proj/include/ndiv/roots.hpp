#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ndiv/branch_function.hpp"
#include "ndiv/spectrum.hpp"

namespace ndiv {

// Residue vector (p_1, ..., p_d) in Z_n^d selecting the root branch on each
// positive component: branch j gets phase (phase_f(j) + 2*pi*p_j)/n. Entries
// beyond the stored length are zero (used for infinite supports, where all
// but finitely many components take the principal branch).
struct PhaseVector {
  int n = 2;
  std::vector<int> entries;

  static PhaseVector zeros(int n, int len);
  int entry(int j) const;    // 1-based component index; 0 past the end
  int max_support() const;   // largest j with a nonzero entry, 0 if none
  bool operator==(const PhaseVector&) const = default;
};

struct RootEntry {
  PhaseVector pv;
  BranchFunction g;
  PsdVerdict verdict;
};

struct RootSet {
  int n = 2;
  std::optional<int> k;     // component parameter of a finite spec; nullopt for periodic
  std::int64_t bound = 0;   // n^(k-1) for finite specs, -1 when unbounded
  std::vector<RootEntry> roots;
};

struct RootOptions {
  std::int64_t cap = 4096;   // enumeration budget (candidates considered)
  double tol = 1e-12;        // residual tolerance, relative to max(1, f(0))
  unsigned seed = 0;         // rng seed for Gram point sets (profile-phase route)
  int gram_trials = 40;      // Gram point sets per candidate on that route
  double grid_step = 0.0;    // bracket scan step; 0 picks the default
  double t_max = 0.0;        // bracket scan end; 0 picks the default
  double per_unit = 64.0;    // residual grid density (samples per unit length)
  int window_components = 8; // grid window past the phase support, periodic specs

  bool operator==(const RootOptions&) const = default;
};

// n^(k-1), saturating at INT64_MAX on overflow. Requires n >= 2, k >= 1.
std::int64_t root_count_bound(int n, int k);

// The candidate n-th root selected by pv: same knots and scales as f, center
// modulus f_center^(1/n), branch j phase (phase_f + 2*pi*p_j)/n (exact for
// rational phases, pointwise for profiles), power f.power()/n. Requires
// f.power() divisible by n and, for finite specs, pv.entries.size() == k-1.
BranchFunction root_candidate(const BranchFunction& f, const PhaseVector& pv);

// g^n == f within tol * max(1, f(0)) on the union grid of g and f. Does not
// check positive definiteness of g (see enumerate_roots / gram_psd_oracle).
bool verify_root(const BranchFunction& g, const BranchFunction& f, int n, double tol = 1e-12);

// All n-th roots of f with the same branch structure. Finite specs enumerate
// the full n^(k-1) phase grid, raising cap_error (with the needed budget)
// when it exceeds opts.cap; periodic specs take the first opts.cap vectors
// of the graded stream. Candidates must pass a positive-definiteness check
// and the residual bound. Generators with exact phases go through the
// analytic/grid spectrum route; anything else falls back to seeded Gram
// probes.
RootSet enumerate_roots(const BranchFunction& f, int n, const RootOptions& opts = {});

// First `count` phase vectors in graded order: grade d vectors have their
// last nonzero entry at position d, enumerated lexicographically within a
// grade. Injective, covers all finitely supported vectors in the limit.
std::vector<PhaseVector> graded_phase_vectors(int n, std::int64_t count);

// Unwrapped argument of sampled values along one component. floor_scale sets
// the modulus threshold below which the angle is considered unreliable:
// samples with |value| <= 1e-9 * floor_scale are interpolated through, but a
// gap wider than the unwrap window (3 consecutive samples) is an error.
PhaseProfile phase_extract(std::span<const double> xs, std::span<const std::complex<double>> values,
                           int component, double floor_scale);

// Number of distinct phase vectors among the verified roots.
int distinct_count(const RootSet& rs);

// Number of sup-norm-distinct functions over xs: two functions closer than
// tol everywhere on the grid count as one.
int distinct_count(const std::vector<BranchFunction>& gs, std::span<const double> xs,
                   double tol = 1e-9);

}  // namespace ndiv
