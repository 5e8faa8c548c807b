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

#include "greedylab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "greedylab/sampling.hpp"

namespace greedylab {

void SweepResult::record(double lhs, double rhs, double tol) {
  ++samples;
  const double slack = rhs - lhs;
  if (samples == 1)
    worst_slack = slack;
  else
    worst_slack = std::min(worst_slack, slack);
  if (rhs > 0) max_ratio = std::max(max_ratio, lhs / rhs);
  if (lhs > rhs + tol * std::max(1.0, std::abs(rhs))) ++violations;
}

SweepResult averaging_projection_sweep(const SymSpace& space,
                                       const Partition& part, std::size_t dim,
                                       std::size_t trials, std::uint64_t seed) {
  SweepResult out;
  Rng master(seed);
  const std::size_t d = std::min<std::size_t>(dim, part.total());
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    const Vec f = sample_heavy_tailed(d, rng);
    const double nf = space.norm(f);
    out.record(space.norm(avg_projection(f, part)), 2.0 * nf);
    out.record(space.norm(q_projection(f, part)), 3.0 * nf);
  }
  return out;
}

SweepResult sandwich_sweep(const GaugeSpace& y, std::size_t trials,
                           std::uint64_t seed) {
  SweepResult out;
  Rng master(seed);
  const Partition& part = y.partition();
  const double nu_max = y.basis().max_vector_norm(part.blocks());
  const double nu_min = y.basis().min_vector_norm(part.blocks());
  // For a normalized seed basis the constants are exactly 1 and 5; otherwise
  // the two sides scale by the extreme basis-vector norms.
  const double lower_scale = std::min(1.0, nu_min);
  const double upper_scale = 3.0 + 2.0 * nu_max;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    const std::size_t r = rng.uniform_index(part.blocks());
    const Vec f = sample_heavy_tailed_window(part.block_end(r),
                                             part.block_begin(r),
                                             part.block_end(r), rng);
    const double nf = y.space().norm(f);
    const double gauge = y.norm(f);
    out.record(lower_scale * nf, gauge);
    out.record(gauge, upper_scale * nf);
  }
  return out;
}

SweepResult embedding_sweep(const GaugeSpace& y, std::size_t trials,
                            std::uint64_t seed) {
  SweepResult out;
  Rng master(seed);
  const double cs = y.partition().c_sigma();
  const GaugeConstants consts = y.constants();
  auto check = [&](const Vec& f) {
    const EmbeddingCheck e = y.embedding_check(f);
    out.record(e.weak_lorentz_norm, (1.0 + cs) * e.gauge_norm);
    out.record(e.gauge_norm, (3.0 + cs) * e.lorentz_wprime_norm);
    if (consts.has_lrp)
      out.record(e.gauge_norm, (3.0 + cs) * consts.c_d * e.lorentz_w_norm);
  };
  // Structured stress vectors: block indicators, the first unit vector, and
  // constant-on-blocks vectors whose seed coefficients have small norm but
  // extreme coefficients.
  for (std::size_t r = 0; r < y.partition().blocks(); ++r) {
    Vec indicator(y.partition().block_end(r), 0.0);
    for (std::size_t j = y.partition().block_begin(r);
         j < y.partition().block_end(r); ++j)
      indicator[j] = 1.0;
    check(indicator);
  }
  check(Vec{1.0});
  {
    // Constant-on-blocks vector whose seed coefficients have unit seed-basis
    // norm but near-extremal coefficients (ambient tails alternate +-1): the
    // sharpest known stress for the weak-Lorentz side.
    const std::size_t blocks = y.partition().blocks();
    Vec tails(blocks + 1, 0.0);
    for (std::size_t n = 0; n < blocks; ++n) tails[n] = (n % 2 == 0) ? 1.0 : -1.0;
    Vec seeds(blocks, 0.0);
    for (std::size_t n = 0; n < blocks; ++n) seeds[n] = tails[n] - tails[n + 1];
    Vec f(y.partition().total(), 0.0);
    for (std::size_t n = 0; n < blocks; ++n)
      for (std::size_t j = y.partition().block_begin(n);
           j < y.partition().block_end(n); ++j)
        f[j] = seeds[n] / y.lambda_block(n);
    check(f);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    check(sample_heavy_tailed(y.dim(), rng));
  }
  return out;
}

SweepResult commuting_sweep(const GaugeSpace& y, std::size_t trials,
                            std::uint64_t seed, double tol) {
  SweepResult out;
  Rng master(seed);
  const std::size_t blocks = y.partition().blocks();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    const Vec f = sample_heavy_tailed(y.dim(), rng);
    const std::size_t size = rng.uniform_index(blocks + 1);
    const IndexSet ids = sample_subset(blocks, size, rng);
    const double defect = y.commuting_defect(f, ids);
    out.record(defect, tol * std::max(1.0, max_abs(f)), 0.0);
  }
  return out;
}

SweepResult roundtrip_sweep(const GaugeSpace& y, std::size_t trials,
                            std::uint64_t seed, double tol) {
  SweepResult out;
  Rng master(seed);
  const std::size_t blocks = y.partition().blocks();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    const Vec f = sample_heavy_tailed(y.dim(), rng);
    const auto [g, h] = y.h_map(f);
    const Vec back = y.g_map(g, h);
    double defect = 0.0;
    for (std::size_t j = 0; j < y.dim(); ++j) {
      const double a = j < f.size() ? f[j] : 0.0;
      const double b = j < back.size() ? back[j] : 0.0;
      defect = std::max(defect, std::abs(a - b));
    }
    // Forward direction on an admissible pair: g from a Q-image, random h.
    Vec h2(blocks, 0.0);
    for (std::size_t n = 0; n < blocks; ++n) h2[n] = rng.uniform(-2.0, 2.0);
    const Vec g2 = q_projection(sample_heavy_tailed(y.dim(), rng), y.partition());
    const auto [gg, hh] = y.h_map(y.g_map(g2, h2));
    for (std::size_t j = 0; j < y.dim(); ++j) {
      const double a = j < g2.size() ? g2[j] : 0.0;
      const double b = j < gg.size() ? gg[j] : 0.0;
      defect = std::max(defect, std::abs(a - b));
    }
    for (std::size_t n = 0; n < blocks; ++n)
      defect = std::max(defect, std::abs(h2[n] - hh[n]));
    const double scale = std::max(1.0, std::max(max_abs(f), max_abs(g2)));
    out.record(defect, tol * scale, 0.0);
  }
  return out;
}

SweepResult tail_projection_sweep(const GaugeSpace& y, std::size_t trials,
                                  std::uint64_t seed) {
  SweepResult out;
  Rng master(seed);
  const Partition& part = y.partition();
  const std::size_t blocks = part.blocks();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    const Vec f = sample_heavy_tailed(y.dim(), rng);
    // Hypothesis-respecting set: pick r, then at most M_r indices from the
    // tail starting at block r.
    const std::size_t r = rng.uniform_index(blocks);
    const std::size_t tail_begin = part.block_begin(r);
    const std::size_t tail_len = part.total() - tail_begin;
    const std::size_t cap = std::min<std::size_t>(part.cumulative(r + 1), tail_len);
    const std::size_t size = 1 + rng.uniform_index(cap);
    IndexSet a = sample_subset(tail_len, size, rng);
    for (std::size_t& j : a) j += tail_begin;
    const TailProjectionCheck check = y.tail_projection_check(f, a);
    ++out.samples;
    out.worst_slack = out.samples == 1
                          ? check.worst_slack
                          : std::min(out.worst_slack, check.worst_slack);
    out.max_ratio = std::max(out.max_ratio, check.ratio / check.c_a);
    if (!check.bound_ok || !check.per_block_ok || !check.q_estimate_ok ||
        !check.l1_block_ok)
      ++out.violations;
  }
  return out;
}

SweepResult block_functional_sweep(const GaugeSpace& y, std::size_t trials,
                                   std::uint64_t seed) {
  SweepResult out;
  Rng master(seed);
  const Partition& part = y.partition();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    const Vec f = sample_heavy_tailed(y.dim(), rng);
    const std::size_t n = rng.uniform_index(part.blocks());
    const std::size_t size = 1 + rng.uniform_index(part.block_size(n));
    IndexSet a = sample_subset(part.block_size(n), size, rng);
    for (std::size_t& j : a) j += part.block_begin(n);
    const Vec saf = coordinate_projection(f, a);
    const double lhs = std::abs(y.v_coeffs(saf)[n]);
    IndexSet block_idx;
    for (std::size_t j = part.block_begin(n); j < part.block_end(n); ++j)
      block_idx.push_back(j);
    const double rhs = 2.0 * y.space().lambda_star(a.size()) /
                       y.space().lambda_star(part.block_size(n)) *
                       y.space().norm(coordinate_projection(f, block_idx));
    out.record(lhs, rhs);
  }
  return out;
}

SweepResult block_functional_l1_sweep(const GaugeSpace& y, std::size_t trials,
                                      std::uint64_t seed) {
  SweepResult out;
  Rng master(seed);
  const Partition& part = y.partition();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    const Vec f = sample_heavy_tailed(y.dim(), rng);
    const std::size_t n = rng.uniform_index(part.blocks());
    const std::size_t size = 1 + rng.uniform_index(part.block_size(n));
    IndexSet a = sample_subset(part.block_size(n), size, rng);
    for (std::size_t& j : a) j += part.block_begin(n);
    const Vec saf = coordinate_projection(f, a);
    const double lhs = std::abs(y.v_coeffs(saf)[n]);
    const double vn = y.v_coeffs(f)[n];
    const double avg = vn / y.lambda_block(n);  // block average of f
    double dev = 0.0;
    for (std::size_t j = part.block_begin(n); j < part.block_end(n); ++j)
      dev += std::abs((j < f.size() ? f[j] : 0.0) - avg);
    const double rhs = y.space().lambda(a.size()) /
                           y.space().lambda(part.block_size(n)) * std::abs(vn) +
                       dev;
    out.record(lhs, rhs);
  }
  return out;
}

SweepResult q_estimate_sweep(const GaugeSpace& y, std::size_t trials,
                             std::uint64_t seed) {
  SweepResult out;
  Rng master(seed);
  const Partition& part = y.partition();
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    const Vec f = sample_heavy_tailed(y.dim(), rng);
    const std::size_t size = 1 + rng.uniform_index(y.dim());
    const IndexSet a = sample_subset(y.dim(), size, rng);
    const Vec saf = coordinate_projection(f, a);
    const double lhs = y.space().norm(q_projection(saf, part));
    std::vector<std::size_t> a_count(part.blocks(), 0);
    for (std::size_t j : a) a_count[part.block_of(j)]++;
    const Vec h = y.v_coeffs(f);
    double sum_term = 0.0;
    for (std::size_t n = 0; n < part.blocks(); ++n) {
      if (a_count[n] == 0) continue;
      sum_term += y.space().lambda(a_count[n]) /
                  y.space().lambda(part.block_size(n)) * std::abs(h[n]);
    }
    const double rhs =
        5.0 * y.space().norm(q_projection(f, part)) + 2.0 * sum_term;
    out.record(lhs, rhs);
  }
  return out;
}

SweepResult lambda_mean_sweep(const SymSpace& space, std::size_t m_max) {
  SweepResult out;
  for (std::size_t k = 1; k <= m_max; ++k) {
    const double lk = space.lambda(k);
    for (std::size_t n = 1; n <= m_max; ++n) {
      const double ln = space.lambda(n);
      const double kk = static_cast<double>(k), nn = static_cast<double>(n);
      out.record(kk / (kk + nn) * ln + nn / (kk + nn) * lk, 2.0 * lk);
    }
  }
  return out;
}

LiftRetractionSweep lift_retraction_sweep(std::size_t dim, std::size_t trials,
                                          std::uint64_t seed) {
  LiftRetractionSweep out;
  const SymSpace l1 = SymSpace::lp(1.0);
  const SymSpace c0 = SymSpace::c0();
  const SymSpace v1 = SymSpace::variation();
  Rng master(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    const Vec f = sample_heavy_tailed(dim, rng);
    ++out.samples;
    const Vec lf = lifting_L(f);
    const Vec back = retraction_T(lf);
    for (std::size_t j = 0; j < std::max(f.size(), back.size()); ++j) {
      const double a = j < f.size() ? f[j] : 0.0;
      const double b = j < back.size() ? back[j] : 0.0;
      if (a != b) {
        ++out.roundtrip_violations;
        break;
      }
    }
    const double f_l1 = l1.norm(f);
    const double lf_v1 = v1.norm(lf);
    if (f_l1 > 0) out.max_lift_factor = std::max(out.max_lift_factor, lf_v1 / f_l1);
    if (lf_v1 > f_l1 * (1.0 + 1e-9)) ++out.lift_violations;
    const Vec tf = retraction_T(f);
    if (l1.norm(tf) > v1.norm(f) * (1.0 + 1e-9)) ++out.retraction_l1_violations;
    if (c0.norm(tf) > 2.0 * c0.norm(f) * (1.0 + 1e-9))
      ++out.retraction_sup_violations;
  }
  return out;
}

}  // namespace greedylab
