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

#include "greedylab/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace greedylab {

namespace {

constexpr double kTol = 1e-9;

bool leq(double lhs, double rhs) {
  return lhs <= rhs + kTol * std::max(1.0, std::abs(rhs));
}

}  // namespace

Vec avg_projection(const Vec& f, const Partition& part) {
  const std::size_t eff = support_end(f);
  if (eff > part.total())
    throw std::domain_error("support beyond the partitioned range");
  // Averages extend over whole blocks: coordinates past f.size() are zeros of
  // the same block, so the output covers every touched block in full.
  const std::size_t padded =
      eff == 0 ? f.size()
               : std::max<std::size_t>(f.size(), part.block_end(part.block_of(eff - 1)));
  Vec out(padded, 0.0);
  for (std::size_t r = 0; r < part.blocks(); ++r) {
    const std::size_t lo = part.block_begin(r);
    if (lo >= eff) break;
    const std::size_t hi = std::min<std::size_t>(part.block_end(r), f.size());
    double sum = 0.0;
    for (std::size_t j = lo; j < hi; ++j) sum += f[j];
    const double avg = sum / static_cast<double>(part.block_size(r));
    for (std::size_t j = lo; j < part.block_end(r); ++j) out[j] = avg;
  }
  return out;
}

Vec q_projection(const Vec& f, const Partition& part) {
  Vec out = avg_projection(f, part);
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = (j < f.size() ? f[j] : 0.0) - out[j];
  return out;
}

GaugeSpace::GaugeSpace(BasisRep basis, SymSpace space, Partition partition)
    : basis_(std::move(basis)), space_(std::move(space)), part_(std::move(partition)) {
  if (!space_.subsymmetric())
    throw std::invalid_argument("gauge needs a subsymmetric sequence space");
  if (basis_.dim_cap != 0 && basis_.dim_cap < part_.blocks())
    throw std::invalid_argument("seed basis range shorter than the partition");
  lambda_block_.resize(part_.blocks());
  for (std::size_t r = 0; r < part_.blocks(); ++r)
    lambda_block_[r] = space_.lambda(part_.block_size(r));
}

void GaugeSpace::require_in_range(const Vec& f) const {
  if (support_end(f) > part_.total())
    throw std::domain_error("support beyond the partitioned range");
}

double GaugeSpace::lambda_block(std::size_t r) const { return lambda_block_[r]; }

Vec GaugeSpace::v_coeffs(const Vec& f) const {
  require_in_range(f);
  Vec h(part_.blocks(), 0.0);
  for (std::size_t r = 0; r < part_.blocks(); ++r) {
    const std::size_t lo = part_.block_begin(r);
    const std::size_t hi = std::min<std::size_t>(part_.block_end(r), f.size());
    if (lo >= f.size()) break;
    double sum = 0.0;
    for (std::size_t j = lo; j < hi; ++j) sum += f[j];
    h[r] = sum * lambda_block_[r] / static_cast<double>(part_.block_size(r));
  }
  return h;
}

Vec GaugeSpace::unit_block_vector(std::size_t r) const {
  Vec v(part_.block_end(r), 0.0);
  for (std::size_t j = part_.block_begin(r); j < part_.block_end(r); ++j)
    v[j] = 1.0 / lambda_block_[r];
  return v;
}

double GaugeSpace::norm(const Vec& f) const {
  require_in_range(f);
  return space_.norm(q_projection(f, part_)) + basis_.coeff_norm(v_coeffs(f));
}

std::pair<Vec, Vec> GaugeSpace::h_map(const Vec& f) const {
  return {q_projection(f, part_), v_coeffs(f)};
}

Vec GaugeSpace::g_map(const Vec& g, const Vec& h) const {
  require_in_range(g);
  if (h.size() > part_.blocks())
    throw std::domain_error("more block coefficients than blocks");
  const double scale = std::max(1.0, max_abs(g));
  for (std::size_t r = 0; r < part_.blocks(); ++r) {
    const std::size_t lo = part_.block_begin(r);
    const std::size_t hi = std::min<std::size_t>(part_.block_end(r), g.size());
    if (lo >= g.size()) break;
    double sum = 0.0;
    for (std::size_t j = lo; j < hi; ++j) sum += g[j];
    if (std::abs(sum) > 1e-9 * scale * static_cast<double>(part_.block_size(r)))
      throw std::domain_error("g has a nonzero block average");
  }
  Vec out(part_.total(), 0.0);
  for (std::size_t j = 0; j < g.size(); ++j) out[j] = g[j];
  for (std::size_t r = 0; r < h.size(); ++r) {
    if (h[r] == 0.0) continue;
    const double value = h[r] / lambda_block_[r];
    for (std::size_t j = part_.block_begin(r); j < part_.block_end(r); ++j)
      out[j] += value;
  }
  return out;
}

double GaugeSpace::commuting_defect(
    const Vec& f, const std::vector<std::size_t>& block_ids) const {
  require_in_range(f);
  IndexSet b;
  for (std::size_t r : block_ids) {
    if (r >= part_.blocks()) throw std::domain_error("block id out of range");
    for (std::size_t j = part_.block_begin(r); j < part_.block_end(r); ++j)
      b.push_back(j);
  }
  const Vec sbf = coordinate_projection(f, b);
  // Identity 1: block functionals of S_B f match those of f on selected
  // blocks and vanish elsewhere.
  const Vec hs = v_coeffs(sbf);
  const Vec hf = v_coeffs(f);
  std::vector<bool> selected(part_.blocks(), false);
  for (std::size_t r : block_ids) selected[r] = true;
  double defect = 0.0;
  for (std::size_t r = 0; r < part_.blocks(); ++r) {
    const double want = selected[r] ? hf[r] : 0.0;
    defect = std::max(defect, std::abs(hs[r] - want));
  }
  // Identity 2: S_B Q f = Q S_B f.
  const Vec lhs = coordinate_projection(q_projection(f, part_), b);
  const Vec rhs = q_projection(sbf, part_);
  for (std::size_t j = 0; j < std::max(lhs.size(), rhs.size()); ++j) {
    const double l = j < lhs.size() ? lhs[j] : 0.0;
    const double r = j < rhs.size() ? rhs[j] : 0.0;
    defect = std::max(defect, std::abs(l - r));
  }
  return defect;
}

double GaugeSpace::weak_lorentz_w_norm(const Vec& f) const {
  // W_m telescopes to Lambda_m for w = (Lambda_n - Lambda_{n-1}).
  const Vec a = rearrange_nonincreasing(f);
  double best = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0.0) break;
    best = std::max(best, a[n] * space_.lambda(n + 1));
  }
  return best;
}

double GaugeSpace::lorentz_w_norm(const Vec& f) const {
  const Vec a = rearrange_nonincreasing(f);
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0.0) break;
    s += a[n] * (space_.lambda(n + 1) - space_.lambda(n));
  }
  return s;
}

double GaugeSpace::lorentz_wprime_norm(const Vec& f) const {
  const Vec a = rearrange_nonincreasing(f);
  double s = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0.0) break;
    s += a[n] * space_.lambda(n + 1) / static_cast<double>(n + 1);
  }
  return s;
}

EmbeddingCheck GaugeSpace::embedding_check(const Vec& f) const {
  EmbeddingCheck out;
  const double cs = part_.c_sigma();
  out.weak_lorentz_norm = weak_lorentz_w_norm(f);
  out.lorentz_wprime_norm = lorentz_wprime_norm(f);
  out.lorentz_w_norm = lorentz_w_norm(f);
  out.gauge_norm = norm(f);
  out.lower_slack = (1.0 + cs) * out.gauge_norm - out.weak_lorentz_norm;
  out.upper_slack = (3.0 + cs) * out.lorentz_wprime_norm - out.gauge_norm;
  out.lower_ok = leq(out.weak_lorentz_norm, (1.0 + cs) * out.gauge_norm);
  out.upper_ok = leq(out.gauge_norm, (3.0 + cs) * out.lorentz_wprime_norm);
  const GaugeConstants c = constants();
  if (c.has_lrp) {
    out.w_upper_checked = true;
    const double rhs = (3.0 + cs) * c.c_d * out.lorentz_w_norm;
    out.w_upper_ok = leq(out.gauge_norm, rhs);
    out.w_upper_slack = rhs - out.gauge_norm;
  }
  return out;
}

GaugeConstants GaugeSpace::constants() const {
  if (constants_) return *constants_;
  GaugeConstants c;
  const std::size_t blocks = part_.blocks();
  auto lam = [&](std::size_t m) { return space_.lambda(m); };
  auto lam_star = [&](std::size_t m) { return space_.lambda_star(m); };

  for (std::size_t r = 0; r < blocks; ++r) {
    c.c1 = std::max(c.c1, lam_star(part_.cumulative(r + 1)) /
                              lam_star(part_.block_size(r)));
    c.c3 = std::max(c.c3, lam(part_.cumulative(r + 1)) /
                              lam(part_.block_size(r)));
    double s_star = 0.0, s = 0.0;
    for (std::size_t n = r; n < blocks; ++n) {
      s_star += lam_star(part_.block_size(r)) / lam_star(part_.block_size(n));
      s += lam(part_.block_size(r)) / lam(part_.block_size(n));
    }
    c.c2 = std::max(c.c2, s_star);
    c.c4 = std::max(c.c4, s);
  }
  c.kappa = basis_.coeff_functional_bound(blocks);
  c.nu_max = basis_.max_vector_norm(blocks);
  c.nu_min = basis_.min_vector_norm(blocks);
  c.l1_route = space_.is_l1();

  const std::size_t horizon = std::min<std::size_t>(part_.total(), 2048);
  bool lrp_ok = false, urp_ok = false;
  try {
    lrp_ok = check_lrp(lam, 64, horizon).has_value();
    urp_ok = check_urp(lam, 64, horizon).has_value();
  } catch (const std::exception&) {
    c.note = "fundamental sequence horizon too short";
  }
  c.has_lrp = lrp_ok;
  if (lrp_ok) c.c_d = dini_constant(lam, part_.total());

  if (c.l1_route) {
    c.applicable = true;
    c.c_a = std::max(5.0 + c.nu_max, (2.0 + c.nu_max) * c.c3 * c.c4 * c.kappa);
    c.note = "l1 route";
  } else {
    // The regular route needs both regularity properties of Lambda on the
    // working horizon.
    c.applicable = lrp_ok && urp_ok;
    if (c.applicable) {
      c.c_a = 2.0 * c.nu_max * c.c1 * c.c2 * std::max(1.0, c.kappa) +
              std::max(5.0, 2.0 * c.c3 * c.c4 * c.kappa);
      c.note = "regular route (LRP+URP verified on horizon)";
    } else if (c.note.empty()) {
      c.note = "LRP or URP fails on the horizon";
    }
  }
  constants_ = c;
  return c;
}

TailProjectionCheck GaugeSpace::tail_projection_check(const Vec& f,
                                                      const IndexSet& a) const {
  require_in_range(f);
  TailProjectionCheck out;
  const GaugeConstants c = constants();
  if (!c.applicable)
    throw std::domain_error("tail projection bound inapplicable: " + c.note);
  if (a.empty()) {
    out.bound_ok = out.per_block_ok = out.q_estimate_ok = true;
    out.c_a = c.c_a;
    out.worst_slack = c.c_a * norm(f);
    return out;
  }
  std::size_t min_index = a[0];
  for (std::size_t j : a) min_index = std::min(min_index, j);
  if (min_index >= part_.total())
    throw std::domain_error("projection set beyond the partitioned range");
  const std::size_t r = part_.block_of(min_index);
  if (a.size() > part_.cumulative(r + 1))
    throw std::domain_error(
        "cardinality hypothesis fails: |A| exceeds the cumulative size of the "
        "blocks before the tail");

  const double gauge_f = norm(f);
  const Vec saf = coordinate_projection(f, a);
  const double gauge_saf = norm(saf);
  out.ratio = gauge_f > 0 ? gauge_saf / gauge_f : 0.0;
  out.c_a = c.c_a;
  out.bound_ok = leq(gauge_saf, c.c_a * gauge_f);
  out.worst_slack = c.c_a * gauge_f - gauge_saf;

  // Per-block functional bound, factor 2: |v*_n(S_{A_n} f)| bounded through
  // the Lambda* ratio times the S-norm of the block restriction.
  const Vec h_saf = v_coeffs(saf);
  const Vec h_f = v_coeffs(f);
  std::vector<std::size_t> a_count(part_.blocks(), 0);
  for (std::size_t j : a) a_count[part_.block_of(j)]++;
  out.per_block_ok = true;
  for (std::size_t n = 0; n < part_.blocks(); ++n) {
    if (a_count[n] == 0) continue;
    IndexSet block_idx;
    for (std::size_t j = part_.block_begin(n); j < part_.block_end(n); ++j)
      block_idx.push_back(j);
    const double block_norm = space_.norm(coordinate_projection(f, block_idx));
    const double rhs = 2.0 * space_.lambda_star(a_count[n]) /
                       space_.lambda_star(part_.block_size(n)) * block_norm;
    out.per_block_ok = out.per_block_ok && leq(std::abs(h_saf[n]), rhs);
    out.worst_slack = std::min(out.worst_slack, rhs - std::abs(h_saf[n]));

    if (space_.is_l1()) {
      double dev = 0.0;
      const double avg = h_f[n] * (static_cast<double>(part_.block_size(n)) /
                                   space_.lambda(part_.block_size(n))) /
                         static_cast<double>(part_.block_size(n));
      for (std::size_t j = part_.block_begin(n); j < part_.block_end(n); ++j)
        dev += std::abs((j < f.size() ? f[j] : 0.0) - avg);
      const double rhs_l1 = space_.lambda(a_count[n]) /
                                space_.lambda(part_.block_size(n)) *
                                std::abs(h_f[n]) +
                            dev;
      out.l1_block_ok = out.l1_block_ok && leq(std::abs(h_saf[n]), rhs_l1);
      out.worst_slack = std::min(out.worst_slack, rhs_l1 - std::abs(h_saf[n]));
    }
  }

  // Q-part estimate, factors 5 and 2.
  const double lhs_q = space_.norm(q_projection(saf, part_));
  double sum_term = 0.0;
  for (std::size_t n = 0; n < part_.blocks(); ++n) {
    if (a_count[n] == 0) continue;
    sum_term += space_.lambda(a_count[n]) / space_.lambda(part_.block_size(n)) *
                std::abs(h_f[n]);
  }
  const double rhs_q =
      5.0 * space_.norm(q_projection(f, part_)) + 2.0 * sum_term;
  out.q_estimate_ok = leq(lhs_q, rhs_q);
  out.worst_slack = std::min(out.worst_slack, rhs_q - lhs_q);
  return out;
}

std::string GaugeSpace::describe() const {
  return "gauge[" + basis_.name + "," + space_.describe() + "," +
         part_.describe() + "]";
}

BidemocracyRow bidemocracy_row(const SymSpace& space, std::size_t m,
                               std::size_t budget, std::uint64_t seed) {
  BidemocracyRow row;
  row.m = m;
  row.lambda = space.lambda(m);
  const Vec indicator(m, 1.0);
  const DualBound dual = dual_norm_lb(space, indicator, budget, seed);
  row.mu = dual.value;
  row.exact = dual.exact;
  row.product = row.lambda * row.mu;
  row.witness = dual.witness;
  return row;
}

}  // namespace greedylab
