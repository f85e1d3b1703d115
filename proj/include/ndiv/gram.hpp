#pragma once

#include <random>
#include <span>
#include <vector>

#include "ndiv/branch_function.hpp"
#include "ndiv/spectrum.hpp"

namespace ndiv {

// Eigenvalues of the Hermitian matrix M[r][c] = f(x_r - x_c), ascending.
std::vector<double> gram_eigenvalues(const BranchFunction& f, std::span<const double> points);

double min_gram_eigenvalue(const BranchFunction& f, std::span<const double> points);

// Brute-force positive-definiteness probe: the Gram matrix over `points` must
// have smallest eigenvalue >= -1e-10 * max(1, f(0)). Fails with the point set
// and offending eigenvalue as witness. Points must be pairwise distinct.
PsdVerdict gram_psd_oracle(const BranchFunction& f, std::span<const double> points);

// Runs gram_psd_oracle over `trials` random point sets (sizes 2..max_size,
// uniform in [lo, hi]) and returns the first failure, or a pass verdict.
PsdVerdict gram_psd_search(const BranchFunction& f, std::mt19937& rng, int trials,
                           int max_size = 12, double lo = -1.5, double hi = 1.5);

// One random point set: size uniform in {2..max_size}, entries uniform in
// [lo, hi], resampled until pairwise distinct. Deterministic given the rng.
std::vector<double> random_point_set(std::mt19937& rng, int max_size, double lo, double hi);

}  // namespace ndiv
