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

#include "greedylab/condest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "greedylab/sampling.hpp"

namespace greedylab {

namespace {

double ratio_for(const BasisRep& basis, const Vec& f, const IndexSet& a) {
  const double denom = basis.coeff_norm(f);
  if (denom <= 0.0) return 0.0;
  return basis.coeff_norm(coordinate_projection(f, a)) / denom;
}

// Golden-section coordinate ascent on f -> ||S_A f|| / ||f||, keeping the
// best iterate. The objective is scale-invariant, so no normalization step
// is needed between sweeps.
void ascend(const BasisRep& basis, const IndexSet& a, Vec& f, double& best,
            const SearchBudget& budget) {
  double cur = ratio_for(basis, f, a);
  for (std::size_t sweep = 0; sweep < budget.sweeps; ++sweep) {
    bool improved = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double save = f[i];
      const double span = std::max(1.0, 2.0 * max_abs(f));
      double lo = save - span, hi = save + span;
      for (std::size_t it = 0; it < budget.line_evals; ++it) {
        const double m1 = lo + (hi - lo) * 0.381966;
        const double m2 = hi - (hi - lo) * 0.381966;
        f[i] = m1;
        const double v1 = ratio_for(basis, f, a);
        f[i] = m2;
        const double v2 = ratio_for(basis, f, a);
        if (v1 > v2)
          hi = m2;
        else
          lo = m1;
      }
      f[i] = 0.5 * (lo + hi);
      const double v = ratio_for(basis, f, a);
      if (v > cur + 1e-13) {
        cur = v;
        improved = true;
      } else {
        f[i] = save;
      }
    }
    if (!improved) break;
  }
  best = std::max(best, cur);
}

ProjNormResult search_projection_norm(const BasisRep& basis, const IndexSet& a,
                                      std::size_t dim,
                                      const SearchBudget& budget,
                                      std::uint64_t seed) {
  ProjNormResult out;
  out.exact = false;
  Rng rng(seed);
  std::vector<Vec> starts;
  Vec alt(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) alt[i] = (i % 2 == 0) ? 1.0 : -1.0;
  starts.push_back(alt);
  if (!a.empty()) {
    Vec e(dim, 0.0);
    e[a[0]] = 1.0;
    starts.push_back(e);
  }
  for (std::size_t s = starts.size(); s < budget.starts; ++s) {
    Rng local = rng.fork(s);
    starts.push_back(sample_heavy_tailed(dim, local));
  }
  for (Vec& f : starts) {
    double prev = out.value;
    ascend(basis, a, f, out.value, budget);
    if (out.value > prev) {
      out.witness_f = f;
      out.witness_set = a;
    }
  }
  return out;
}

std::vector<IndexSet> candidate_sets(std::size_t m, const SearchBudget& budget,
                                     Rng& rng) {
  std::vector<IndexSet> sets;
  for (std::size_t j = 1; j <= m; ++j) {
    IndexSet prefix;
    for (std::size_t i = 0; i < j; ++i) prefix.push_back(i);
    sets.push_back(prefix);
    if (j > 1) {
      IndexSet suffix;
      for (std::size_t i = j - 1; i < m; ++i) suffix.push_back(i);
      sets.push_back(suffix);
    }
  }
  IndexSet evens, odds;
  for (std::size_t i = 0; i < m; ++i) (i % 2 ? odds : evens).push_back(i);
  sets.push_back(evens);
  if (!odds.empty()) sets.push_back(odds);
  for (std::size_t t = 0; t < budget.random_sets; ++t) {
    const std::size_t size = 1 + rng.uniform_index(m);
    sets.push_back(sample_subset(m, size, rng));
  }
  return sets;
}

}  // namespace

double witness_ratio(const BasisRep& basis, const WitnessCandidate& w) {
  return ratio_for(basis, w.first, w.second);
}

namespace {

// The projection operator in ambient coordinates, S_A = M D_A M^{-1},
// assembled as a sum of rank-one terms M[:,j] * Minv[j,:] over j in A so the
// (pre-inverted) factors can be reused across a subset enumeration.
Mat ambient_projection_operator(const Mat& m, const Mat& minv,
                                const IndexSet& a) {
  const std::size_t n = m.size();
  Mat op(n, Vec(n, 0.0));
  for (std::size_t j : a)
    for (std::size_t r = 0; r < n; ++r) {
      const double mj = m[r][j];
      if (mj == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) op[r][c] += mj * minv[j][c];
    }
  return op;
}

ProjNormResult exact_matrix_projection_norm(const BasisRep& basis, const Mat& m,
                                            const Mat& minv, const IndexSet& a) {
  ProjNormResult out;
  out.exact = true;
  if (a.empty()) return out;
  const Mat op = ambient_projection_operator(m, minv, a);
  Vec ambient;
  if (basis.exact == BasisRep::ExactPath::kMatrixL1) {
    out.value = operator_norm_l1(op);
    ambient = maximizer_l1(op);
  } else if (basis.exact == BasisRep::ExactPath::kMatrixLinf) {
    out.value = operator_norm_linf(op);
    ambient = maximizer_linf(op);
  } else {
    out.value = operator_norm_l2(op);
    ambient = maximizer_l2(op);
  }
  out.witness_f = matvec(minv, ambient);
  out.witness_set = a;
  return out;
}

}  // namespace

ProjNormResult proj_operator_norm(const BasisRep& basis, const IndexSet& a,
                                  std::size_t dim, const SearchBudget& budget,
                                  std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("dim must be positive");
  for (std::size_t j : a)
    if (j >= dim) throw std::invalid_argument("projection set outside [0, dim)");
  ProjNormResult out;
  if (a.empty()) {
    out.exact = true;
    return out;
  }
  switch (basis.exact) {
    case BasisRep::ExactPath::kLatticeDiag: {
      out.value = 1.0;
      out.exact = true;
      Vec f(dim, 0.0);
      f[a[0]] = 1.0;
      out.witness_f = f;
      out.witness_set = a;
      return out;
    }
    case BasisRep::ExactPath::kMatrixL1:
    case BasisRep::ExactPath::kMatrixL2:
    case BasisRep::ExactPath::kMatrixLinf: {
      const Mat m = basis.truncation_matrix(dim);
      return exact_matrix_projection_norm(basis, m, invert(m), a);
    }
    case BasisRep::ExactPath::kNone:
      return search_projection_norm(basis, a, dim, budget, seed);
  }
  return out;
}

ProjNormResult compute_L_m(const BasisRep& basis, std::size_t m, bool exact,
                           const SearchBudget& budget, std::uint64_t seed,
                           const std::vector<WitnessCandidate>& extra) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  ProjNormResult out;
  if (exact) {
    if (basis.exact == BasisRep::ExactPath::kNone)
      throw std::invalid_argument("exact mode needs an exact ambient path");
    if (basis.exact == BasisRep::ExactPath::kLatticeDiag) {
      out.value = 1.0;
      out.exact = true;
      out.witness_f = Vec(m, 0.0);
      out.witness_f[0] = 1.0;
      out.witness_set = {0};
      return out;
    }
    if (m > kMaxExactLm)
      throw std::length_error("exact mode capped at m <= 20");
    out.exact = true;
    const Mat mat = basis.truncation_matrix(m);
    const Mat minv = invert(mat);
    const std::size_t limit = std::size_t{1} << m;
    for (std::size_t mask = 1; mask < limit; ++mask) {
      IndexSet a;
      for (std::size_t j = 0; j < m; ++j)
        if (mask & (std::size_t{1} << j)) a.push_back(j);
      const ProjNormResult r = exact_matrix_projection_norm(basis, mat, minv, a);
      if (r.value > out.value) out = r;
    }
    return out;
  }
  // Search mode: structured subsets, seeded random subsets, caller witnesses.
  out.exact = false;
  for (const WitnessCandidate& w : extra) {
    const double v = witness_ratio(basis, w);
    if (v > out.value) {
      out.value = v;
      out.witness_f = w.first;
      out.witness_set = w.second;
    }
  }
  Rng rng(seed);
  const std::vector<IndexSet> sets = candidate_sets(m, budget, rng);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    ProjNormResult r =
        search_projection_norm(basis, sets[k], m, budget, seed ^ (k + 1));
    // Witness-seeded ascent: restart from the best known vector as well.
    if (!out.witness_f.empty()) {
      Vec f = out.witness_f;
      f.resize(m, 0.0);
      ascend(basis, sets[k], f, r.value, budget);
      if (r.value > ratio_for(basis, r.witness_f, r.witness_set)) {
        r.witness_f = f;
        r.witness_set = sets[k];
      }
    }
    if (r.value > out.value) {
      out.value = r.value;
      out.witness_f = r.witness_f;
      out.witness_set = r.witness_set;
    }
  }
  return out;
}

ProjNormResult compute_k_m(const BasisRep& basis, std::size_t m,
                           std::size_t dim, bool exact,
                           const SearchBudget& budget, std::uint64_t seed) {
  if (m == 0 || m > dim) throw std::invalid_argument("need 1 <= m <= dim");
  ProjNormResult out;
  if (exact) {
    if (basis.exact == BasisRep::ExactPath::kNone)
      throw std::invalid_argument("exact mode needs an exact ambient path");
    if (basis.exact == BasisRep::ExactPath::kLatticeDiag) {
      out.value = 1.0;
      out.exact = true;
      out.witness_f = Vec(dim, 0.0);
      out.witness_f[0] = 1.0;
      out.witness_set = {0};
      return out;
    }
    // Count subsets of size <= m before enumerating.
    double count = 0.0;
    double binom = 1.0;
    for (std::size_t s = 1; s <= m; ++s) {
      binom = binom * static_cast<double>(dim - s + 1) / static_cast<double>(s);
      count += binom;
      if (count > static_cast<double>(kMaxExactSubsets))
        throw std::length_error("exact subset enumeration cap exceeded");
    }
    out.exact = true;
    const Mat mat = basis.truncation_matrix(dim);
    const Mat minv = invert(mat);
    IndexSet a;
    // Depth-first enumeration of all subsets of [0, dim) with size <= m.
    std::function<void(std::size_t)> walk = [&](std::size_t next) {
      if (!a.empty()) {
        const ProjNormResult r = exact_matrix_projection_norm(basis, mat, minv, a);
        if (r.value > out.value) out = r;
      }
      if (a.size() == m) return;
      for (std::size_t j = next; j < dim; ++j) {
        a.push_back(j);
        walk(j + 1);
        a.pop_back();
      }
    };
    walk(0);
    return out;
  }
  out.exact = false;
  Rng rng(seed);
  std::vector<IndexSet> sets;
  for (std::size_t start = 0; start + m <= dim; start += std::max<std::size_t>(1, m))
    {
      IndexSet interval;
      for (std::size_t i = start; i < start + m; ++i) interval.push_back(i);
      sets.push_back(interval);
    }
  IndexSet alt;
  for (std::size_t i = 0; i < dim && alt.size() < m; i += 2) alt.push_back(i);
  sets.push_back(alt);
  for (std::size_t t = 0; t < budget.random_sets; ++t) {
    const std::size_t size = 1 + rng.uniform_index(m);
    sets.push_back(sample_subset(dim, size, rng));
  }
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const ProjNormResult r =
        search_projection_norm(basis, sets[k], dim, budget, seed ^ (k + 7));
    if (r.value > out.value) out = r;
  }
  return out;
}

BasisRep gauge_unit_basis(const GaugeSpace& y) {
  BasisRep b;
  b.name = "unit[" + y.describe() + "]";
  b.exact = BasisRep::ExactPath::kNone;
  b.dim_cap = y.dim();
  const GaugeSpace* gauge = &y;
  b.coeff_norm = [gauge](const Vec& a) { return gauge->norm(a); };
  b.vector_norm = [gauge](std::size_t j) {
    Vec e(j + 1, 0.0);
    e[j] = 1.0;
    return gauge->norm(e);
  };
  // Coordinate functionals are bounded through the Q-part lattice bound and
  // the seed-basis coefficient bound.
  b.coeff_functional_bound = [gauge](std::size_t) {
    const SymSpace& s = gauge->space();
    const double e1 = s.norm(Vec{1.0});
    double lam_min = gauge->lambda_block(0);
    for (std::size_t r = 0; r < gauge->partition().blocks(); ++r)
      lam_min = std::min(lam_min, gauge->lambda_block(r));
    const double kb =
        gauge->basis().coeff_functional_bound(gauge->partition().blocks());
    return 1.0 / e1 + kb / lam_min;
  };
  return b;
}

Vec block_witness_vector(const GaugeSpace& y, const Vec& seed_coeffs) {
  const Partition& part = y.partition();
  if (seed_coeffs.size() > part.blocks())
    throw std::invalid_argument("more seed coefficients than blocks");
  Vec f(part.cumulative(seed_coeffs.size()), 0.0);
  for (std::size_t n = 0; n < seed_coeffs.size(); ++n) {
    const double value = seed_coeffs[n] / y.lambda_block(n);
    for (std::size_t j = part.block_begin(n); j < part.block_end(n); ++j)
      f[j] = value;
  }
  return f;
}

ProjNormResult gauge_witness_lower_bound(const GaugeSpace& y, std::size_t r,
                                         const SearchBudget& budget,
                                         std::uint64_t seed) {
  const Partition& part = y.partition();
  if (r == 0 || r > part.blocks())
    throw std::invalid_argument("r outside the configured partition range");

  // Candidate seed-coefficient vectors with their projection sets. The first
  // candidate is the optimizer of the seed-basis constant when the exact
  // route exists.
  std::vector<WitnessCandidate> candidates;
  const bool exact_seed =
      y.basis().exact != BasisRep::ExactPath::kNone && r <= kMaxExactLm;
  if (exact_seed) {
    const ProjNormResult lr = compute_L_m(y.basis(), r, true, budget, seed);
    candidates.emplace_back(lr.witness_f, lr.witness_set);
  } else {
    const ProjNormResult lr = compute_L_m(y.basis(), r, false, budget, seed);
    candidates.emplace_back(lr.witness_f, lr.witness_set);
  }
  Vec alternating(r, 0.0);
  for (std::size_t n = 0; n < r; ++n) alternating[n] = (n % 2 == 0) ? 1.0 : -1.0;
  IndexSet evens;
  for (std::size_t n = 0; n < r; n += 2) evens.push_back(n);
  candidates.emplace_back(alternating, evens);
  Rng rng(seed);
  for (std::size_t t = 0; t < budget.random_sets; ++t) {
    Rng local = rng.fork(t);
    Vec a = sample_heavy_tailed(r, local);
    const std::size_t size = 1 + local.uniform_index(r);
    candidates.emplace_back(std::move(a), sample_subset(r, size, local));
  }

  ProjNormResult out;
  out.exact = false;
  for (const WitnessCandidate& cand : candidates) {
    if (is_zero(cand.first)) continue;
    const Vec f = block_witness_vector(y, cand.first);
    IndexSet b;
    for (std::size_t n : cand.second) {
      if (n >= r) continue;
      for (std::size_t j = part.block_begin(n); j < part.block_end(n); ++j)
        b.push_back(j);
    }
    const double denom = y.norm(f);
    if (denom <= 0.0) continue;
    const double value = y.norm(coordinate_projection(f, b)) / denom;
    if (value > out.value) {
      out.value = value;
      out.witness_f = f;
      out.witness_set = b;
    }
  }
  return out;
}

GrowthFit log_growth_fit(const std::vector<std::pair<double, double>>& table,
                         double log_power) {
  if (table.size() < 3)
    throw std::invalid_argument("growth fit needs at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(table.size());
  for (const auto& [m, v] : table) {
    if (!(m > 0)) throw std::invalid_argument("growth fit needs positive m");
    const double x = std::pow(std::log(m), log_power);
    sx += x;
    sy += v;
    sxx += x * x;
    sxy += x * v;
  }
  const double det = n * sxx - sx * sx;
  if (std::abs(det) < 1e-12)
    throw std::invalid_argument("growth fit: degenerate abscissas");
  GrowthFit fit;
  fit.slope = (n * sxy - sx * sy) / det;
  fit.intercept = (sy - fit.slope * sx) / n;
  double rss = 0.0;
  for (const auto& [m, v] : table) {
    const double x = std::pow(std::log(m), log_power);
    const double res = v - fit.slope * x - fit.intercept;
    rss += res * res;
  }
  fit.residual = std::sqrt(rss / n);
  return fit;
}

}  // namespace greedylab
