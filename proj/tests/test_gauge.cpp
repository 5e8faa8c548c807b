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
#include "greedylab/gauge.hpp"
#include "greedylab/sampling.hpp"
#include "greedylab/suites.hpp"

using namespace greedylab;

TEST_SUITE_BEGIN("gauge");

TEST_CASE("averaging projection and its complement") {
  const Partition part({2, 2});
  const Vec f = {1, 3, 5, 7};
  CHECK(avg_projection(f, part) == Vec{2, 2, 6, 6});
  CHECK(q_projection(f, part) == Vec{-1, 1, -1, 1});
  SUBCASE("block-constant vectors are fixed points") {
    const Vec c = {4, 4, -2, -2};
    CHECK(avg_projection(c, part) == c);
    for (double v : q_projection(c, part)) CHECK(v == 0.0);
  }
  SUBCASE("idempotence and complementarity") {
    Rng rng(1);
    const Partition dyad = Partition::dyadic(5);
    for (int t = 0; t < 30; ++t) {
      const Vec g = sample_heavy_tailed(dyad.total(), rng);
      const Vec p = avg_projection(g, dyad);
      const Vec pp = avg_projection(p, dyad);
      const Vec q = q_projection(g, dyad);
      for (std::size_t j = 0; j < g.size(); ++j) {
        CHECK(pp[j] == doctest::Approx(p[j]).epsilon(1e-13));
        CHECK(p[j] + q[j] == doctest::Approx(g[j]).epsilon(1e-13));
      }
      const Vec qp = q_projection(p, dyad);
      for (double v : qp) CHECK(std::abs(v) < 1e-12);
    }
  }
  SUBCASE("support beyond the range is rejected") {
    CHECK_THROWS_AS(avg_projection({1, 2, 3, 4, 5}, part), std::domain_error);
  }
  SUBCASE("vectors ending mid-block average over the whole block") {
    // (1) inside a block of two: the averaged vector is (1/2, 1/2).
    CHECK(avg_projection({0, 1}, Partition({1, 2})) == Vec{0, 0.5, 0.5});
    CHECK(q_projection({0, 1}, Partition({1, 2})) == Vec{0, 0.5, -0.5});
  }
}

TEST_CASE("trailing zeros never change gauge quantities") {
  const GaugeSpace y(summing_basis(), SymSpace::lp(2.0), Partition::dyadic(5));
  Rng rng(33);
  for (int t = 0; t < 60; ++t) {
    const std::size_t len = 1 + rng.uniform_index(y.dim());
    Vec f = sample_heavy_tailed(len, rng);
    Vec padded = f;
    padded.resize(y.dim(), 0.0);
    CHECK(y.norm(f) == doctest::Approx(y.norm(padded)).epsilon(1e-13));
    const Vec ha = y.v_coeffs(f), hb = y.v_coeffs(padded);
    for (std::size_t n = 0; n < ha.size(); ++n)
      CHECK(ha[n] == doctest::Approx(hb[n]).epsilon(1e-13));
    CHECK(y.embedding_check(f).gauge_norm ==
          doctest::Approx(y.embedding_check(padded).gauge_norm).epsilon(1e-13));
  }
}

TEST_CASE("averaging projection is bounded by 2 on subsymmetric spaces") {
  const Partition part = Partition::dyadic(6);
  const SweepResult r = averaging_projection_sweep(SymSpace::lp(1.5), part,
                                                   part.total(), 200, 99);
  CHECK(r.violations == 0);
}

TEST_CASE("block coefficient functionals") {
  SUBCASE("l1 reduces to block sums") {
    const GaugeSpace y(unit_vector_basis(SymSpace::lp(1.0)), SymSpace::lp(1.0),
                       Partition({2, 3}));
    const Vec f = {1, 2, 3, 4, 5};
    const Vec h = y.v_coeffs(f);
    CHECK(h[0] == doctest::Approx(3.0));
    CHECK(h[1] == doctest::Approx(12.0));
  }
  SUBCASE("biorthogonality against the normalized block vectors") {
    const GaugeSpace y(unit_vector_basis(SymSpace::lp(2.0)), SymSpace::lp(2.0),
                       Partition::dyadic(4));
    for (std::size_t k = 0; k < 4; ++k) {
      const Vec vk = y.unit_block_vector(k);
      CHECK(y.space().norm(vk) == doctest::Approx(1.0).epsilon(1e-12));
      const Vec h = y.v_coeffs(vk);
      for (std::size_t n = 0; n < 4; ++n)
        CHECK(h[n] == doctest::Approx(n == k ? 1.0 : 0.0));
    }
  }
  SUBCASE("l2 block of size two") {
    const GaugeSpace y(unit_vector_basis(SymSpace::lp(2.0)), SymSpace::lp(2.0),
                       Partition({2}));
    const Vec h = y.v_coeffs({1, 3});
    CHECK(h[0] == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    // Cross-check through the reconstruction P f = sum v*_n(f) v_n.
    const Vec p = avg_projection({1, 3}, y.partition());
    const Vec v0 = y.unit_block_vector(0);
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(p[j] == doctest::Approx(h[0] * v0[j]).epsilon(1e-12));
  }
}

TEST_CASE("gauge norm structure") {
  const GaugeSpace y(summing_basis(), SymSpace::lp(2.0), Partition::dyadic(4));
  SUBCASE("block-constant vectors reduce to the seed norm") {
    const Vec seeds = {1, -1, 1, -1};
    const Vec f = block_witness_vector(y, seeds);
    CHECK(y.norm(f) == doctest::Approx(summing_basis().norm(seeds)).epsilon(1e-12));
  }
  SUBCASE("single-block vectors split into Q-part plus one coefficient") {
    Rng rng(4);
    for (std::size_t k = 0; k < 4; ++k) {
      Vec f = sample_heavy_tailed_window(y.partition().block_end(k),
                                         y.partition().block_begin(k),
                                         y.partition().block_end(k), rng);
      const double expected =
          y.space().norm(q_projection(f, y.partition())) +
          std::abs(y.v_coeffs(f)[k]) * y.basis().vector_norm(k);
      CHECK(y.norm(f) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
  SUBCASE("sandwich with constants 1 and 5 for normalized seeds") {
    const GaugeSpace yu(unit_vector_basis(SymSpace::lp(2.0)), SymSpace::lp(2.0),
                        Partition::dyadic(5));
    const SweepResult r = sandwich_sweep(yu, 300, 17);
    CHECK(r.violations == 0);
  }
  SUBCASE("support beyond the partition is a domain error") {
    Vec f(y.dim() + 1, 1.0);
    CHECK_THROWS_AS(y.norm(f), std::domain_error);
  }
}

TEST_CASE("equivalent-norm bracket on the subsymmetric space itself") {
  const SymSpace s = SymSpace::lp(1.5);
  const GaugeSpace y(unit_vector_basis(s), s, Partition::dyadic(5));
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    const Vec f = sample_heavy_tailed(y.dim(), rng);
    const double middle = s.norm(q_projection(f, y.partition())) +
                          s.norm(add_scaled(f, -1.0, q_projection(f, y.partition())));
    CHECK(s.norm(f) <= middle * (1 + 1e-11));
    CHECK(middle <= 5.0 * s.norm(f) * (1 + 1e-11));
  }
}

TEST_CASE("forward and inverse maps") {
  const GaugeSpace y(summing_basis(), SymSpace::lp(2.0), Partition::dyadic(5));
  SUBCASE("round trips on random vectors") {
    const SweepResult r = roundtrip_sweep(y, 100, 23, 1e-12);
    CHECK(r.violations == 0);
  }
  SUBCASE("block-constant input maps to a pure coefficient pair") {
    const Vec f = block_witness_vector(y, {2, -1, 3, 0, 1});
    const auto [g, h] = y.h_map(f);
    for (double v : g) CHECK(std::abs(v) < 1e-12);
    CHECK(h[0] == doctest::Approx(2.0));
    CHECK(h[4] == doctest::Approx(1.0));
  }
  SUBCASE("inverse rejects inputs with nonzero block averages") {
    Vec bad(y.dim(), 0.0);
    bad[0] = 1.0;  // block of size one cannot average to zero
    CHECK_THROWS_AS(y.g_map(bad, Vec(5, 0.0)), std::domain_error);
  }
}

TEST_CASE("block-aligned projections commute") {
  const GaugeSpace y(summing_basis(), SymSpace::lp(2.0), Partition::dyadic(4));
  Rng rng(12);
  SUBCASE("all blocks and no blocks") {
    const Vec f = sample_heavy_tailed(y.dim(), rng);
    CHECK(y.commuting_defect(f, {0, 1, 2, 3}) < 1e-12);
    CHECK(y.commuting_defect(f, {}) < 1e-12);
  }
  SUBCASE("random block subsets") {
    const SweepResult r = commuting_sweep(y, 200, 31, 1e-12);
    CHECK(r.violations == 0);
  }
}

TEST_CASE("embedding constants") {
  const GaugeSpace y(summing_basis(), SymSpace::lp(2.0), Partition::dyadic(7));
  SUBCASE("tight partition validators") {
    CHECK(y.partition().c_sigma() == doctest::Approx(127.0 / 64.0));
    CHECK(y.partition().c_sigma_shift() < 1.0);
  }
  SUBCASE("indicators and unit vectors") {
    CHECK(y.embedding_check(Vec{1.0}).lower_ok);
    CHECK(y.embedding_check(Vec{1.0}).upper_ok);
    Vec block(7, 0.0);
    for (std::size_t j = y.partition().block_begin(2);
         j < y.partition().block_end(2); ++j) {
      block.resize(std::max<std::size_t>(block.size(), j + 1), 0.0);
      block[j] = 1.0;
    }
    const EmbeddingCheck e = y.embedding_check(block);
    CHECK(e.lower_ok);
    CHECK(e.upper_ok);
  }
  SUBCASE("seeded sweep has no violations") {
    const SweepResult r = embedding_sweep(y, 300, 41);
    CHECK(r.violations == 0);
  }
  SUBCASE("lrp variant against the d1(w) norm") {
    const GaugeConstants c = y.constants();
    REQUIRE(c.has_lrp);
    CHECK(c.c_d <= 2.0 + 1e-12);  // dini of sqrt at any horizon
    Rng rng(51);
    for (int t = 0; t < 60; ++t) {
      const EmbeddingCheck e = y.embedding_check(sample_heavy_tailed(y.dim(), rng));
      CHECK(e.w_upper_checked);
      CHECK(e.w_upper_ok);
    }
  }
}

TEST_CASE("assembled projection constants") {
  SUBCASE("l2 with dyadic blocks") {
    const GaugeSpace y(summing_basis(), SymSpace::lp(2.0), Partition::dyadic(8));
    const GaugeConstants c = y.constants();
    CHECK(c.applicable);
    CHECK_FALSE(c.l1_route);
    // Lambda*_m = sqrt(m): ratio constant below sqrt(2), geometric sum
    // constant below 1/(1 - 2^{-1/2}).
    CHECK(c.c1 <= std::sqrt(2.0) + 1e-12);
    CHECK(c.c1 == doctest::Approx(std::sqrt(255.0 / 128.0)).epsilon(1e-12));
    CHECK(c.c2 <= 1.0 / (1.0 - std::pow(2.0, -0.5)) + 1e-12);
    CHECK(c.c3 == doctest::Approx(c.c1));
    CHECK(c.c4 == doctest::Approx(c.c2));
    CHECK(c.kappa == doctest::Approx(2.0));
    CHECK(c.nu_max == doctest::Approx(1.0));
    const double expected =
        2.0 * c.nu_max * c.c1 * c.c2 * std::max(1.0, c.kappa) +
        std::max(5.0, 2.0 * c.c3 * c.c4 * c.kappa);
    CHECK(c.c_a == doctest::Approx(expected));
  }
  SUBCASE("l1 route with the difference seed") {
    const GaugeSpace y(difference_basis(), SymSpace::lp(1.0), Partition::dyadic(8));
    const GaugeConstants c = y.constants();
    CHECK(c.applicable);
    CHECK(c.l1_route);
    CHECK(c.nu_max == doctest::Approx(2.0));
    CHECK(c.kappa == doctest::Approx(1.0));
    // Lambda_m = m on dyadic blocks: the ratio constant is (2^R - 1)/2^{R-1}
    // and the ratio-sum constant is the partial geometric series 2 - 2^{-(R-1)}.
    CHECK(c.c3 == doctest::Approx(255.0 / 128.0));
    CHECK(c.c4 == doctest::Approx(2.0 - std::pow(2.0, -7.0)));
    const double expected =
        std::max(5.0 + c.nu_max, (2.0 + c.nu_max) * c.c3 * c.c4 * c.kappa);
    CHECK(c.c_a == doctest::Approx(expected));
  }
  SUBCASE("c0 ambient has no regular route") {
    const GaugeSpace y(summing_basis(), SymSpace::c0(), Partition::dyadic(5));
    CHECK_FALSE(y.constants().applicable);
    Vec f(y.dim(), 1.0);
    CHECK_THROWS_AS(y.tail_projection_check(f, {1}), std::domain_error);
  }
}

TEST_CASE("tail projection checks") {
  const GaugeSpace y(summing_basis(), SymSpace::lp(2.0), Partition::dyadic(6));
  Rng rng(77);
  const Vec f = sample_heavy_tailed(y.dim(), rng);
  SUBCASE("empty set is trivially fine") {
    CHECK(y.tail_projection_check(f, {}).bound_ok);
  }
  SUBCASE("one full block respects the bound") {
    IndexSet block;
    for (std::size_t j = y.partition().block_begin(3);
         j < y.partition().block_end(3); ++j)
      block.push_back(j);
    const TailProjectionCheck c = y.tail_projection_check(f, block);
    CHECK(c.bound_ok);
    CHECK(c.per_block_ok);
    CHECK(c.q_estimate_ok);
  }
  SUBCASE("cardinality hypothesis is enforced") {
    // A touches block 0, so |A| must stay <= M_1 = 1.
    CHECK_THROWS_AS(y.tail_projection_check(f, {0, 1}), std::domain_error);
  }
  SUBCASE("seeded hypothesis-respecting sweep") {
    CHECK(tail_projection_sweep(y, 300, 5).violations == 0);
  }
  SUBCASE("supporting block estimates") {
    CHECK(block_functional_sweep(y, 300, 6).violations == 0);
    CHECK(q_estimate_sweep(y, 300, 7).violations == 0);
    const GaugeSpace y1(difference_basis(), SymSpace::lp(1.0), Partition::dyadic(6));
    CHECK(block_functional_l1_sweep(y1, 300, 8).violations == 0);
    CHECK(tail_projection_sweep(y1, 300, 9).violations == 0);
  }
}

TEST_CASE("coordinate functionals of the gauge are uniformly bounded") {
  const GaugeSpace y(summing_basis(), SymSpace::lp(2.0), Partition::dyadic(5));
  const BasisRep unit = gauge_unit_basis(y);
  const double bound = unit.coeff_functional_bound(y.dim());
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Vec f = sample_heavy_tailed(y.dim(), rng);
    const double nf = y.norm(f);
    for (double v : f) CHECK(std::abs(v) <= bound * nf * (1 + 1e-9));
  }
}

TEST_CASE("bidemocracy bracket") {
  SUBCASE("exact for lp via Hoelder duals") {
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const SymSpace s = SymSpace::lp(p);
      for (std::size_t m : {1, 2, 10, 100}) {
        const BidemocracyRow row = bidemocracy_row(s, m, 0, 1);
        CHECK(row.exact);
        CHECK(row.product == doctest::Approx(double(m)).epsilon(1e-9));
      }
    }
  }
  SUBCASE("certified lower half elsewhere") {
    const SymSpace s = SymSpace::lorentz(1.0, Weight::power(-0.5));
    for (std::size_t m : {1, 4, 16}) {
      const BidemocracyRow row = bidemocracy_row(s, m, 128, 3);
      CHECK(row.product >= double(m) - 1e-9);
      CHECK(row.product <= 2.0 * double(m) + 1e-9);
    }
  }
}

TEST_SUITE_END();
