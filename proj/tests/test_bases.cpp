// Copyright 2026 the greedylab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "greedylab/bases.hpp"
#include "greedylab/condest.hpp"
#include "greedylab/sampling.hpp"

using namespace greedylab;

TEST_SUITE_BEGIN("bases");

TEST_CASE("unit vector basis is the identity into its space") {
  const BasisRep b = unit_vector_basis(SymSpace::lp(2.0));
  CHECK(b.norm({3, 4}) == doctest::Approx(5.0));
  CHECK(b.vector_norm(3) == doctest::Approx(1.0));
  const BasisRep lor = unit_vector_basis(SymSpace::lorentz(1.0, Weight::explicit_list({1.0, 0.5, 0.25})));
  CHECK(lor.vector_norm(0) == doctest::Approx(1.0));
  CHECK(lor.vector_norm(2) == doctest::Approx(1.0));  // w_1 = 1
  SUBCASE("coordinate projections commute with the identity map") {
    const Vec f = {1, -2, 3, 4};
    const IndexSet a = {0, 2};
    CHECK(b.norm(coordinate_projection(f, a)) ==
          doctest::Approx(SymSpace::lp(2.0).norm({1, 0, 3, 0})));
  }
}

TEST_CASE("summing basis evaluates tail sums in the max norm") {
  const BasisRep s = summing_basis();
  CHECK(s.norm({1, -1, 1, -1}) == doctest::Approx(1.0));
  CHECK(s.norm({1}) == doctest::Approx(1.0));
  CHECK(s.norm({1, 1}) == doctest::Approx(2.0));
  CHECK(s.vector_norm(5) == doctest::Approx(1.0));
  SUBCASE("matrix route matches the direct evaluation") {
    const Mat m = s.truncation_matrix(4);
    const Vec coeffs = {2, -1, 3, -2};
    const Vec ambient = matvec(m, coeffs);
    CHECK(SymSpace::c0().norm(ambient) == doctest::Approx(s.norm(coeffs)));
  }
  SUBCASE("alternating coefficients keep norm one while odd projections grow") {
    for (std::size_t m = 2; m <= 6; ++m) {
      Vec f(2 * m, 0.0);
      for (std::size_t i = 0; i < 2 * m; ++i) f[i] = (i % 2 == 0) ? 1.0 : -1.0;
      CHECK(s.norm(f) == doctest::Approx(1.0));
      IndexSet odds;
      for (std::size_t i = 0; i < 2 * m; i += 2) odds.push_back(i);
      CHECK(s.norm(coordinate_projection(f, odds)) ==
            doctest::Approx(static_cast<double>(m)));
    }
  }
}

TEST_CASE("difference basis telescopes into l1") {
  const BasisRep d = difference_basis();
  CHECK(d.norm({1, 1}) == doctest::Approx(1.0));
  CHECK(d.norm({0, 1}) == doctest::Approx(2.0));
  CHECK(d.norm({1, 0}) == doctest::Approx(1.0));
  CHECK(d.vector_norm(0) == doctest::Approx(1.0));
  CHECK(d.vector_norm(1) == doctest::Approx(2.0));
  SUBCASE("constant coefficient vectors have norm one") {
    for (std::size_t n = 1; n <= 9; ++n) {
      Vec ones(n, 1.0);
      CHECK(d.norm(ones) == doctest::Approx(1.0));
    }
  }
  SUBCASE("matrix route matches the direct evaluation") {
    const Mat m = d.truncation_matrix(5);
    const Vec coeffs = {2, -1, 3, 0, 1};
    CHECK(SymSpace::lp(1.0).norm(matvec(m, coeffs)) ==
          doctest::Approx(d.norm(coeffs)));
  }
}

TEST_CASE("truncation maps are linear") {
  Rng rng(3);
  for (const BasisRep& b : {summing_basis(), difference_basis()}) {
    const Mat m = b.truncation_matrix(8);
    const Vec f = sample_heavy_tailed(8, rng);
    const Vec g = sample_heavy_tailed(8, rng);
    const Vec combo = add_scaled(f, -2.5, g);
    const Vec lhs = matvec(m, combo);
    const Vec rhs = add_scaled(matvec(m, f), -2.5, matvec(m, g));
    for (std::size_t i = 0; i < 8; ++i)
      CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-12));
  }
}

TEST_CASE("direct sum splits odd and even coefficient positions") {
  const BasisRep u2 = unit_vector_basis(SymSpace::lp(2.0));
  const BasisRep b = direct_sum(u2, u2);
  CHECK(b.norm({1, 1}) == doctest::Approx(2.0));
  SUBCASE("odd-supported vectors reduce to the first summand") {
    const BasisRep mixed = direct_sum(summing_basis(), u2);
    const Vec f = {1, 0, -1, 0, 1, 0};  // feeds (1,-1,1) into the summing part
    CHECK(mixed.norm(f) == doctest::Approx(summing_basis().norm({1, -1, 1})));
  }
  SUBCASE("witness transfer through odd positions") {
    const BasisRep s = summing_basis();
    const std::size_t m = 3;
    const SearchBudget budget;
    const ProjNormResult lm = compute_L_m(s, m, true, budget, 1);
    Vec embedded(2 * m - 1, 0.0);
    for (std::size_t i = 0; i < lm.witness_f.size() && i < m; ++i)
      embedded[2 * i] = lm.witness_f[i];
    IndexSet embedded_set;
    for (std::size_t j : lm.witness_set) embedded_set.push_back(2 * j);
    const BasisRep sum2 = direct_sum(s, s);
    const double ratio =
        sum2.norm(coordinate_projection(embedded, embedded_set)) /
        sum2.norm(embedded);
    CHECK(ratio == doctest::Approx(lm.value).epsilon(1e-9));
  }
}

TEST_CASE("block repeat norms each copy by the seed basis") {
  const BasisRep s = summing_basis();
  SUBCASE("single copy is isometric") {
    const BasisRep one = block_repeat(s, {4}, 1.0);
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
      const Vec f = sample_heavy_tailed(4, rng);
      CHECK(one.norm(f) == doctest::Approx(s.norm(f)));
    }
  }
  SUBCASE("vector supported in the second copy") {
    const BasisRep two = block_repeat(s, {2, 3}, 1.0);
    const Vec f = {0, 0, 1, -1, 1};
    CHECK(two.norm(f) == doctest::Approx(s.norm({1, -1, 1})));
  }
  SUBCASE("max combination") {
    const BasisRep two = block_repeat(s, {2, 2}, 0.0);
    CHECK(two.norm({1, 1, 1, 0}) ==
          doctest::Approx(std::max(s.norm({1, 1}), s.norm({1, 0}))));
  }
  SUBCASE("coefficients beyond the configured copies are rejected") {
    const BasisRep two = block_repeat(s, {2, 2}, 1.0);
    CHECK_THROWS_AS(two.norm({1, 1, 1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(two.vector_norm(4), std::domain_error);
  }
  SUBCASE("witness transfer into a later copy") {
    const SearchBudget budget;
    const ProjNormResult l2w = compute_L_m(s, 2, true, budget, 1);
    const BasisRep two = block_repeat(s, {2, 4}, 1.0);
    Vec embedded(2 + l2w.witness_f.size(), 0.0);
    for (std::size_t i = 0; i < l2w.witness_f.size(); ++i)
      embedded[2 + i] = l2w.witness_f[i];
    IndexSet shifted;
    for (std::size_t j : l2w.witness_set) shifted.push_back(2 + j);
    const double ratio = two.norm(coordinate_projection(embedded, shifted)) /
                         two.norm(embedded);
    CHECK(ratio == doctest::Approx(l2w.value).epsilon(1e-9));
  }
  SUBCASE("doubling schedule stays below ratio one") {
    std::vector<std::size_t> schedule;
    for (int n = 1; n <= 12; ++n) schedule.push_back(std::size_t{1} << n);
    CHECK(repeat_schedule_ratio(schedule) < 1.0);
    CHECK(repeat_schedule_ratio(schedule) ==
          doctest::Approx((std::pow(2.0, 12.0) - 2.0) / std::pow(2.0, 12.0)));
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(block_repeat(s, {}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(block_repeat(s, {2, 0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(block_repeat(s, {2}, 0.5), std::invalid_argument);
  }
}

TEST_CASE("coefficient functional bounds are valid") {
  Rng rng(14);
  const std::vector<BasisRep> bases = {
      summing_basis(), difference_basis(),
      unit_vector_basis(SymSpace::lp(1.5)),
      direct_sum(summing_basis(), difference_basis())};
  for (const BasisRep& b : bases) {
    const double kappa = b.coeff_functional_bound(10);
    for (int t = 0; t < 30; ++t) {
      const Vec f = sample_heavy_tailed(10, rng);
      const double nf = b.norm(f);
      for (double v : f) CHECK(std::abs(v) <= kappa * nf * (1 + 1e-9));
    }
  }
  CHECK(summing_basis().coeff_functional_bound(8) == doctest::Approx(2.0));
  CHECK(difference_basis().coeff_functional_bound(8) == doctest::Approx(1.0));
}

TEST_SUITE_END();
