#include "ndiv/gram.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace ndiv {

namespace {

Eigen::MatrixXcd gram_matrix(const BranchFunction& f, std::span<const double> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n < 1) throw spec_error("gram matrix needs at least one point");
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = r + 1; c < points.size(); ++c)
      if (points[r] == points[c]) throw spec_error("gram points must be pairwise distinct");
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    m(r, r) = f.value_at_zero();
    for (Eigen::Index c = r + 1; c < n; ++c) {
      const std::complex<double> v =
          f.eval(points[static_cast<std::size_t>(r)] - points[static_cast<std::size_t>(c)]);
      m(r, c) = v;
      m(c, r) = std::conj(v);
    }
  }
  return m;
}

}  // namespace

std::vector<double> gram_eigenvalues(const BranchFunction& f, std::span<const double> points) {
  const Eigen::MatrixXcd m = gram_matrix(f, points);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solve failed");
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double min_gram_eigenvalue(const BranchFunction& f, std::span<const double> points) {
  return gram_eigenvalues(f, points).front();  // ascending order
}

PsdVerdict gram_psd_oracle(const BranchFunction& f, std::span<const double> points) {
  const double lambda = min_gram_eigenvalue(f, points);
  const double floor = -1e-10 * std::max(1.0, f.value_at_zero());
  if (lambda >= floor) return {true, PsdPath::eigen, std::nullopt};
  return {false, PsdPath::eigen,
          PsdWitness{std::vector<double>(points.begin(), points.end()), lambda}};
}

std::vector<double> random_point_set(std::mt19937& rng, int max_size, double lo, double hi) {
  if (max_size < 2) throw spec_error("point sets need at least two points");
  std::uniform_int_distribution<int> size_dist(2, max_size);
  std::uniform_real_distribution<double> point_dist(lo, hi);
  const int size = size_dist(rng);
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(size));
  while (static_cast<int>(pts.size()) < size) {
    const double p = point_dist(rng);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

PsdVerdict gram_psd_search(const BranchFunction& f, std::mt19937& rng, int trials, int max_size,
                           double lo, double hi) {
  for (int t = 0; t < trials; ++t) {
    const std::vector<double> pts = random_point_set(rng, max_size, lo, hi);
    const PsdVerdict v = gram_psd_oracle(f, pts);
    if (!v.passed) return v;
  }
  return {true, PsdPath::eigen, std::nullopt};
}

}  // namespace ndiv
