#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "ndiv/construct.hpp"
#include "ndiv/kernels.hpp"
#include "ndiv/roots.hpp"
#include "ndiv/spectrum.hpp"

using namespace ndiv;

// Every parallel kernel must return the bit-identical GridPoint (value and
// position) of its serial reference, including on ties.

TEST_CASE("grid evaluation: parallel equals serial exactly") {
  const BranchFunction f = example_f1(3);
  const BranchFunction g = root_candidate(f, PhaseVector{3, {1, 2}});
  const std::vector<double> xs = default_grid(g, 512.0);
  CHECK(xs.size() > 5000);
  CHECK(eval_grid(g, xs) == eval_grid_serial(g, xs));
  CHECK(eval_grid(f, xs) == eval_grid_serial(f, xs));
  CHECK(eval_grid(f, std::vector<double>{}).empty());
}

TEST_CASE("bracket scan: parallel equals serial exactly") {
  const CosineSpectrum s = spectrum_of(root_candidate(example_f1(2), PhaseVector{2, {1, 1}}));
  for (double step : {1e-3, 0.007, 0.31})
    CHECK(min_bracket_scan(s, 0.0, 100.0, step) == min_bracket_scan_serial(s, 0.0, 100.0, step));
  // Single-point scan.
  CHECK(min_bracket_scan(s, 2.0, 2.0, 0.5) == min_bracket_scan_serial(s, 2.0, 2.0, 0.5));
  CHECK(min_bracket_scan(s, 2.0, 2.0, 0.5).at == 2.0);
}

TEST_CASE("tie breaking is deterministic: first index wins") {
  // A constant bracket ties everywhere; both scans must report the start.
  const CosineSpectrum flat(Atom(1.0, 1.0), 1.0, {});
  const GridPoint par = min_bracket_scan(flat, 0.5, 10.5, 0.25);
  const GridPoint ser = min_bracket_scan_serial(flat, 0.5, 10.5, 0.25);
  CHECK(par == ser);
  CHECK(par.at == 0.5);
  CHECK(par.value == 1.0);

  // The Hermitian defect of any branch function vanishes identically: every
  // grid point ties at 0, so the reported position is the first one.
  const BranchFunction g = root_candidate(example_f1(2), PhaseVector{2, {1, 0}});
  const std::vector<double> xs = default_grid(g);
  const GridPoint dpar = max_hermitian_defect(g, xs);
  CHECK(dpar == max_hermitian_defect_serial(g, xs));
  CHECK(dpar.value == 0.0);
  CHECK(dpar.at == xs.front());
}

TEST_CASE("power residual and modulus maxima: parallel equals serial exactly") {
  const BranchFunction f = example_f1(3);
  const BranchFunction g = root_candidate(f, PhaseVector{3, {2, 1}});
  const std::vector<double> xs = union_grid(g, f);
  CHECK(max_pow_residual(g, f, 3, xs) == max_pow_residual_serial(g, f, 3, xs));

  const GridPoint m = max_abs_value(f, xs);
  CHECK(m == max_abs_value_serial(f, xs));
  CHECK(m.at == 0.0);     // the peak sits at the origin
  CHECK(m.value == 1.0);

  // Deliberate mismatch shows up identically in both implementations.
  const GridPoint bad = max_pow_residual(g, f, 2, xs);
  CHECK(bad == max_pow_residual_serial(g, f, 2, xs));
  CHECK(bad.value > 0.1);
}

TEST_CASE("sample grids are sorted, symmetric, and hit the endpoints") {
  const BranchFunction f = example_f1(2);
  const std::vector<double> xs = default_grid(f);
  CHECK(std::is_sorted(xs.begin(), xs.end()));
  CHECK(std::adjacent_find(xs.begin(), xs.end()) == xs.end());  // duplicate-free
  CHECK(std::binary_search(xs.begin(), xs.end(), 0.0));
  for (double p : {1.0, 10.0, 15.0, -15.0})
    CHECK(std::binary_search(xs.begin(), xs.end(), p));  // exact component endpoints
  for (double x : xs) CHECK(std::binary_search(xs.begin(), xs.end(), -x));  // mirror closed

  // Unbounded support: the window reaches past the first tail knots.
  const BranchFunction h = example_f2(2, 16.0);
  const std::vector<double> hs = default_grid(h);
  CHECK(hs.back() >= 16.0 + 12.0);
  // Union grids contain both operand grids.
  const std::vector<double> us = union_grid(f, h);
  for (double x : xs) CHECK(std::binary_search(us.begin(), us.end(), x));

  // Periodic specs sample a bounded stretch of components.
  const BranchFunction p = construct_f(SupportSpec::periodic(4.0, 2.0), 2);
  const std::vector<double> ps = default_grid(p, 64.0, 8);
  CHECK(std::binary_search(ps.begin(), ps.end(), 32.0 + 1.0));  // end of component 8
  CHECK(ps.back() < 37.0);                                      // and no further
}

TEST_CASE("scan validation") {
  const CosineSpectrum flat(Atom(1.0, 1.0), 1.0, {});
  CHECK_THROWS_AS(min_bracket_scan(flat, 1.0, 0.0, 0.1), spec_error);
  CHECK_THROWS_AS(min_bracket_scan(flat, 0.0, 1.0, 0.0), spec_error);
  CHECK_THROWS_AS(min_bracket_scan_serial(flat, 0.0, 1.0, -0.1), spec_error);
  const BranchFunction f = example_f1(2);
  CHECK_THROWS_AS(max_abs_value(f, std::vector<double>{}), spec_error);
  CHECK_THROWS_AS(max_pow_residual_serial(f, f, 1, std::vector<double>{}), spec_error);
  CHECK_THROWS_AS(default_grid(f, 0.0), spec_error);
}
