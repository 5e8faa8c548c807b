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

#include "greedylab/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "greedylab/sampling.hpp"

namespace greedylab {

NormHandle NormHandle::of(const SymSpace& s) {
  NormHandle h;
  h.name = s.describe();
  h.norm = [&s](const Vec& f) { return s.norm(f); };
  h.sym = &s;
  h.one_unconditional = s.lattice();
  return h;
}

NormHandle NormHandle::of(const GaugeSpace& y) {
  NormHandle h;
  h.name = y.describe();
  h.norm = [&y](const Vec& f) { return y.norm(f); };
  h.gauge = &y;
  h.one_unconditional = false;
  return h;
}

IndexSet greedy_ordering(const Vec& f) {
  IndexSet order(f.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&f](std::size_t i, std::size_t j) {
    return std::abs(f[i]) > std::abs(f[j]);
  });
  return order;
}

IndexSet greedy_set(const Vec& f, std::size_t m) {
  const IndexSet order = greedy_ordering(f);
  const std::size_t take = std::min(m, support_size(f));
  IndexSet out(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
  std::sort(out.begin(), out.end());
  return out;
}

QgEstimate qg_ratio_estimate(const NormHandle& normer, std::size_t dim,
                             std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  QgEstimate est;
  Rng master(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    const Vec f = sample_heavy_tailed(dim, rng);
    const double nf = normer.norm(f);
    if (nf <= 0.0) continue;
    const IndexSet order = greedy_ordering(f);
    Vec residual = f;         // f - S_F f along the greedy ordering
    Vec prefix_resid = f;     // f - S_m f along plain prefixes
    const std::size_t steps = support_size(f);
    for (std::size_t m = 1; m <= steps; ++m) {
      residual[order[m - 1]] = 0.0;
      const double r = normer.norm(residual) / nf;
      if (r > est.max_residual_ratio) {
        est.max_residual_ratio = r;
        est.residual_witness = {f, m, r};
      }
      Vec greedy_part = f;
      for (std::size_t i = 0; i < f.size(); ++i) greedy_part[i] -= residual[i];
      const double pratio = normer.norm(greedy_part) / nf;
      if (pratio > est.max_projection_ratio) {
        est.max_projection_ratio = pratio;
        est.projection_witness = {f, m, pratio};
      }
    }
    for (std::size_t m = 1; m <= dim; ++m) {
      if (m - 1 < prefix_resid.size()) prefix_resid[m - 1] = 0.0;
      est.max_partial_sum_ratio =
          std::max(est.max_partial_sum_ratio, normer.norm(prefix_resid) / nf);
    }
  }
  return est;
}

PhiResult fundamental_phi(const NormHandle& normer, std::size_t m,
                          std::size_t dim, bool exact, std::size_t budget,
                          std::uint64_t seed) {
  if (m == 0 || m > dim) throw std::invalid_argument("need 1 <= m <= dim");
  PhiResult out;
  if (normer.sym && normer.sym->subsymmetric()) {
    out.value = normer.sym->lambda(m);
    out.exact = true;
    out.witness_set.resize(m);
    std::iota(out.witness_set.begin(), out.witness_set.end(), std::size_t{0});
    return out;
  }
  auto eval = [&](const IndexSet& a) {
    Vec f(dim, 0.0);
    for (std::size_t j : a) f[j] = 1.0;
    return normer.norm(f);
  };
  std::vector<IndexSet> sets;
  IndexSet prefix(m);
  std::iota(prefix.begin(), prefix.end(), std::size_t{0});
  sets.push_back(prefix);
  for (std::size_t start = 1; start + m <= dim; start *= 2) {
    IndexSet interval(m);
    std::iota(interval.begin(), interval.end(), start);
    sets.push_back(interval);
  }
  if (normer.gauge) {
    // Block-aligned candidates: fill whole blocks from the largest down.
    const Partition& part = normer.gauge->partition();
    IndexSet aligned;
    for (std::size_t r = part.blocks(); r-- > 0 && aligned.size() < m;) {
      for (std::size_t j = part.block_begin(r);
           j < part.block_end(r) && aligned.size() < m; ++j)
        aligned.push_back(j);
    }
    std::sort(aligned.begin(), aligned.end());
    sets.push_back(aligned);
  }
  bool enumerated = false;
  if (exact) {
    // Exhaustive over all m-subsets when the count stays desk-scale.
    double count = 1.0;
    for (std::size_t s = 1; s <= m; ++s)
      count *= static_cast<double>(dim - s + 1) / static_cast<double>(s);
    if (count <= (1 << 20)) {
      enumerated = true;
      IndexSet a;
      std::function<void(std::size_t)> walk = [&](std::size_t next) {
        if (a.size() == m) {
          const double v = eval(a);
          if (v > out.value) {
            out.value = v;
            out.witness_set = a;
          }
          return;
        }
        for (std::size_t j = next; j + (m - a.size()) <= dim; ++j) {
          a.push_back(j);
          walk(j + 1);
          a.pop_back();
        }
      };
      walk(0);
      out.exact = true;
    } else {
      throw std::length_error("exact subset enumeration cap exceeded");
    }
  }
  if (!enumerated) {
    Rng rng(seed);
    for (std::size_t t = 0; t < std::max<std::size_t>(budget, 8); ++t)
      sets.push_back(sample_subset(dim, m, rng));
    for (const IndexSet& a : sets) {
      const double v = eval(a);
      if (v > out.value) {
        out.value = v;
        out.witness_set = a;
      }
    }
  }
  if (normer.gauge) {
    const double cs = normer.gauge->partition().c_sigma();
    Vec ones(m, 1.0);
    out.upper_bound =
        (3.0 + cs) * normer.gauge->lorentz_wprime_norm(ones);
  }
  return out;
}

SuperDemocracyResult superdemocracy_ratio(const NormHandle& normer,
                                          std::size_t m, std::size_t dim,
                                          std::size_t trials,
                                          std::uint64_t seed) {
  if (m == 0 || m > dim) throw std::invalid_argument("need 1 <= m <= dim");
  SuperDemocracyResult out;
  if (normer.sym && normer.sym->subsymmetric()) {
    out.ratio = 1.0;  // sign and permutation invariance
    out.exact = true;
    return out;
  }
  Rng master(seed);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    const IndexSet a = sample_subset(dim, m, rng);
    Vec f(dim, 0.0);
    for (std::size_t j : a) f[j] = rng.sign();
    const double v = normer.norm(f);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  out.ratio = lo > 0 ? hi / lo : 1.0;
  if (normer.gauge) {
    const double cs = normer.gauge->partition().c_sigma();
    Vec ones(m, 1.0);
    out.cap = (1.0 + cs) * (3.0 + cs) *
              normer.gauge->lorentz_wprime_norm(ones) /
              normer.gauge->space().lambda(m);
  }
  return out;
}

double almost_greedy_ratio_smallcase(const NormHandle& normer, std::size_t dim,
                                     std::size_t trials, std::uint64_t seed) {
  if (dim > 12) throw std::length_error("exhaustive inner minimum capped at dim <= 12");
  Rng master(seed);
  double worst = 1.0;
  const std::size_t total = std::size_t{1} << dim;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = master.fork(t);
    const Vec f = sample_heavy_tailed(dim, rng);
    const IndexSet order = greedy_ordering(f);
    // Best achievable residual per cardinality, over every subset of [0,dim).
    Vec best_by_size(dim + 1, std::numeric_limits<double>::infinity());
    best_by_size[0] = normer.norm(f);
    for (std::size_t mask = 1; mask < total; ++mask) {
      Vec g = f;
      std::size_t size = 0;
      for (std::size_t j = 0; j < dim; ++j)
        if (mask & (std::size_t{1} << j)) {
          g[j] = 0.0;
          ++size;
        }
      const double v = normer.norm(g);
      best_by_size[size] = std::min(best_by_size[size], v);
    }
    for (std::size_t s = 1; s <= dim; ++s)
      best_by_size[s] = std::min(best_by_size[s], best_by_size[s - 1]);
    Vec residual = f;
    for (std::size_t m = 1; m <= support_size(f); ++m) {
      residual[order[m - 1]] = 0.0;
      const double numer = normer.norm(residual);
      const double denom = best_by_size[m];
      if (denom > 1e-300) worst = std::max(worst, numer / denom);
    }
  }
  return worst;
}

}  // namespace greedylab
