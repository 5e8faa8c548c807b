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
#include "greedylab/condest.hpp"
#include "greedylab/sampling.hpp"

using namespace greedylab;

namespace {

double reeval(const BasisRep& b, const ProjNormResult& r) {
  return witness_ratio(b, {r.witness_f, r.witness_set});
}

}  // namespace

TEST_SUITE_BEGIN("condest");

TEST_CASE("coordinate projections have norm one on unit lattice bases") {
  const SearchBudget budget;
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const BasisRep b = unit_vector_basis(SymSpace::lp(p));
    const ProjNormResult r = proj_operator_norm(b, {0, 2, 3}, 6, budget, 1);
    CHECK(r.exact);
    CHECK(r.value == doctest::Approx(1.0));
  }
}

TEST_CASE("difference basis: selecting the second coordinate doubles") {
  const BasisRep d = difference_basis();
  const SearchBudget budget;
  const ProjNormResult r = proj_operator_norm(d, {1}, 2, budget, 1);
  CHECK(r.exact);
  CHECK(r.value == doctest::Approx(2.0));
  // Hand witness: (1,1) has norm 1 and its projection (0,1) has norm 2.
  CHECK(d.norm({1, 1}) == doctest::Approx(1.0));
  CHECK(d.norm({0, 1}) == doctest::Approx(2.0));
  CHECK(reeval(d, r) == doctest::Approx(r.value).epsilon(1e-9));
}

TEST_CASE("summing basis: odd projection on dimension four") {
  const BasisRep s = summing_basis();
  const SearchBudget budget;
  const ProjNormResult r = proj_operator_norm(s, {0, 2}, 4, budget, 1);
  CHECK(r.exact);
  CHECK(r.value >= 2.0 - 1e-12);
  const Vec f = {1, -1, 1, -1};
  CHECK(s.norm(coordinate_projection(f, {0, 2})) / s.norm(f) ==
        doctest::Approx(2.0));
  CHECK(reeval(s, r) == doctest::Approx(r.value).epsilon(1e-9));
}

TEST_CASE("exact conditionality constants of the seed bases") {
  const SearchBudget budget;
  SUBCASE("unit basis stays at one") {
    const BasisRep u = unit_vector_basis(SymSpace::lp(1.5));
    for (std::size_t m : {1, 3, 7})
      CHECK(compute_L_m(u, m, true, budget, 1).value == doctest::Approx(1.0));
  }
  SUBCASE("difference basis reaches two at m = 2") {
    const ProjNormResult r = compute_L_m(difference_basis(), 2, true, budget, 1);
    CHECK(r.exact);
    CHECK(r.value == doctest::Approx(2.0));
  }
  SUBCASE("summing basis grows at least linearly in m/2") {
    const BasisRep s = summing_basis();
    double prev = 0.0;
    for (std::size_t m = 1; m <= 8; ++m) {
      const ProjNormResult r = compute_L_m(s, m, true, budget, 1);
      CHECK(r.exact);
      CHECK(r.value >= static_cast<double>(m / 2) - 1e-12);
      CHECK(r.value >= prev - 1e-12);  // L_m is non-decreasing
      CHECK(reeval(s, r) == doctest::Approx(r.value).epsilon(1e-9));
      prev = r.value;
    }
    CHECK(compute_L_m(s, 4, true, budget, 1).value >= 2.0 - 1e-12);
  }
  SUBCASE("exact cap throws a budget error") {
    CHECK_THROWS_AS(compute_L_m(summing_basis(), 21, true, budget, 1),
                    std::length_error);
  }
}

TEST_CASE("search stays below the exact value") {
  const SearchBudget budget;
  for (const BasisRep& b : {summing_basis(), difference_basis()}) {
    for (std::size_t m : {2, 4, 6}) {
      const double exact = compute_L_m(b, m, true, budget, 1).value;
      const ProjNormResult search = compute_L_m(b, m, false, budget, 99);
      CHECK(search.value <= exact + 1e-9);
      CHECK(reeval(b, search) == doctest::Approx(search.value).epsilon(1e-9));
    }
  }
}

TEST_CASE("k_m dominates L_m and grows linearly for the summing basis") {
  const SearchBudget budget;
  const BasisRep s = summing_basis();
  for (std::size_t m : {2, 3}) {
    const double lm = compute_L_m(s, m, true, budget, 1).value;
    const double km = compute_k_m(s, m, m, true, budget, 1).value;
    CHECK(km >= lm - 1e-12);
  }
  SUBCASE("alternating witness on dimension 2m") {
    const std::size_t m = 3;
    const ProjNormResult km = compute_k_m(s, m, 2 * m, true, budget, 1);
    CHECK(km.value >= static_cast<double>(m) - 1e-12);
  }
  SUBCASE("unit basis k_m is one") {
    const BasisRep u = unit_vector_basis(SymSpace::lp(2.0));
    CHECK(compute_k_m(u, 2, 6, true, budget, 1).value == doctest::Approx(1.0));
  }
  SUBCASE("subset cap throws a budget error") {
    CHECK_THROWS_AS(compute_k_m(s, 15, 40, true, budget, 1), std::length_error);
  }
}

TEST_CASE("constant-on-blocks witnesses transfer seed ratios exactly") {
  const GaugeSpace y(summing_basis(), SymSpace::lp(2.0), Partition::dyadic(4));
  const SearchBudget budget;
  SUBCASE("single block gives ratio one") {
    const ProjNormResult r = gauge_witness_lower_bound(y, 1, budget, 1);
    CHECK(r.value == doctest::Approx(1.0));
  }
  SUBCASE("the Q-part of a block witness vanishes") {
    const Vec seeds = {1, -1, 1, -1};
    const Vec f = block_witness_vector(y, seeds);
    const Vec q = q_projection(f, y.partition());
    for (double v : q) CHECK(v == doctest::Approx(0.0));
    CHECK(y.norm(f) == doctest::Approx(summing_basis().norm(seeds)).epsilon(1e-12));
  }
  SUBCASE("matches the exact seed constant") {
    for (std::size_t r = 1; r <= 4; ++r) {
      const double exact = compute_L_m(summing_basis(), r, true, budget, 1).value;
      const ProjNormResult w = gauge_witness_lower_bound(y, r, budget, 5);
      CHECK(w.value == doctest::Approx(exact).epsilon(1e-9));
      CHECK(w.value <= exact + 1e-9);
      // The witness re-evaluates in the gauge to the reported value.
      const double again = y.norm(coordinate_projection(w.witness_f, w.witness_set)) /
                           y.norm(w.witness_f);
      CHECK(again == doctest::Approx(w.value).epsilon(1e-9));
    }
  }
  SUBCASE("search on the gauge dominates the transferred witness") {
    const ProjNormResult w = gauge_witness_lower_bound(y, 3, budget, 5);
    const BasisRep unit = gauge_unit_basis(y);
    const std::size_t m = y.partition().cumulative(3);
    const ProjNormResult lm =
        compute_L_m(unit, m, false, budget, 9, {{w.witness_f, w.witness_set}});
    CHECK(lm.value >= w.value - 1e-9);
  }
}

TEST_CASE("spectral route for an l2-ambient basis") {
  // Diagonal scaling composed with a shear: well-separated singular values,
  // ambient norm = l2 of the mapped coordinates.
  const Mat map = {{3, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0.5}, {0, 0, 0, 0.5}};
  BasisRep b;
  b.name = "sheared";
  b.exact = BasisRep::ExactPath::kMatrixL2;
  b.coeff_norm = [map](const Vec& a) {
    Vec padded = a;
    padded.resize(4, 0.0);
    return SymSpace::lp(2.0).norm(matvec(map, padded));
  };
  b.vector_norm = [map](std::size_t j) {
    Vec e(4, 0.0);
    e[j] = 1.0;
    return SymSpace::lp(2.0).norm(matvec(map, e));
  };
  b.truncation_matrix = [map](std::size_t dim) {
    if (dim != 4) throw std::logic_error("fixed-dimension test basis");
    return map;
  };
  b.coeff_functional_bound = [](std::size_t) { return 10.0; };
  const SearchBudget budget;
  const ProjNormResult r = proj_operator_norm(b, {1, 2}, 4, budget, 3);
  CHECK(r.exact);
  CHECK(reeval(b, r) == doctest::Approx(r.value).epsilon(1e-9));
  // Random lower bounds never beat the exact spectral value.
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const Vec f = sample_heavy_tailed(4, rng);
    const double denom = b.norm(f);
    if (denom <= 0) continue;
    CHECK(b.norm(coordinate_projection(f, {1, 2})) / denom <= r.value * (1 + 1e-9));
  }
}

TEST_CASE("growth fit recovers exact logarithmic laws") {
  std::vector<std::pair<double, double>> table;
  for (double m : {3.0, 7.0, 15.0, 31.0, 63.0})
    table.emplace_back(m, 2.5 * std::log(m) + 0.25);
  const GrowthFit fit = log_growth_fit(table);
  CHECK(fit.slope == doctest::Approx(2.5).epsilon(1e-9));
  CHECK(fit.intercept == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(fit.residual == doctest::Approx(0.0).epsilon(1e-9));
  SUBCASE("constant data fits slope zero") {
    std::vector<std::pair<double, double>> flat;
    for (double m : {2.0, 4.0, 8.0, 16.0}) flat.emplace_back(m, 3.0);
    CHECK(log_growth_fit(flat).slope == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("degenerate abscissas are rejected") {
    std::vector<std::pair<double, double>> bad = {{4.0, 1.0}, {4.0, 2.0}, {4.0, 3.0}};
    CHECK_THROWS_AS(log_growth_fit(bad), std::invalid_argument);
    CHECK_THROWS_AS(log_growth_fit({{2.0, 1.0}, {4.0, 2.0}}),
                    std::invalid_argument);
  }
}

TEST_SUITE_END();
