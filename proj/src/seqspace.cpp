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

#include "greedylab/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "greedylab/sampling.hpp"

namespace greedylab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// Weight

Weight Weight::power(double exponent) {
  Weight w;
  w.kind_ = Kind::kPower;
  w.exponent_ = exponent;
  w.label_ = "power(" + fmt("%g", exponent) + ")";
  return w;
}

Weight Weight::lorentz_classical(double p, double q) {
  if (p < 1.0 || q < 1.0)
    throw std::invalid_argument("lorentz_classical weight needs p, q >= 1");
  Weight w;
  w.kind_ = Kind::kPower;
  w.exponent_ = q / p - 1.0;
  w.label_ = "lorentz(" + fmt("%g", p) + "," + fmt("%g", q) + ")";
  return w;
}

Weight Weight::explicit_list(Vec entries) {
  if (entries.empty()) throw std::invalid_argument("weight list is empty");
  for (double v : entries)
    if (!(v > 0.0)) throw std::invalid_argument("weight entries must be positive");
  Weight w;
  w.kind_ = Kind::kExplicit;
  w.entries_ = std::move(entries);
  w.label_ = "explicit[" + std::to_string(w.entries_.size()) + "]";
  return w;
}

double Weight::at(std::size_t m) const {
  if (m == 0) throw std::invalid_argument("weights are 1-based");
  if (kind_ == Kind::kExplicit) {
    if (m > entries_.size())
      throw std::out_of_range("weight index beyond explicit list");
    return entries_[m - 1];
  }
  return std::pow(static_cast<double>(m), exponent_);
}

std::size_t Weight::max_index() const {
  return kind_ == Kind::kExplicit ? entries_.size()
                                  : std::numeric_limits<std::size_t>::max();
}

double Weight::partial_sum(std::size_t m) const {
  double s = 0.0;
  for (std::size_t n = 1; n <= m; ++n) s += at(n);
  return s;
}

std::string Weight::describe() const { return label_; }

// ---------------------------------------------------------------------------
// SymSpace

SymSpace SymSpace::lp(double p) {
  if (p == kInf) return c0();
  if (!(p >= 1.0)) throw std::invalid_argument("lp requires p >= 1");
  SymSpace s;
  s.kind_ = Kind::kLp;
  s.p_ = p;
  s.subsymmetric_ = true;
  return s;
}

SymSpace SymSpace::c0() {
  SymSpace s;
  s.kind_ = Kind::kLp;
  s.p_ = kInf;
  s.subsymmetric_ = true;
  return s;
}

SymSpace SymSpace::lorentz(double q, Weight w) {
  if (!(q >= 1.0)) throw std::invalid_argument("lorentz requires q >= 1");
  SymSpace s;
  s.kind_ = Kind::kLorentz;
  s.p_ = q;
  s.weight_ = std::move(w);
  s.subsymmetric_ = true;
  // Lambda must be non-decreasing (automatic for positive weights) and
  // Lambda_m / m non-increasing; probe the accessible horizon.
  const std::size_t horizon =
      std::min<std::size_t>(s.weight_->max_index(), 4096);
  double wsum = 0.0;
  double prev_ratio = kInf;
  for (std::size_t m = 1; m <= horizon; ++m) {
    wsum += s.weight_->at(m);
    const double lam = std::pow(wsum, 1.0 / q);
    const double ratio = lam / static_cast<double>(m);
    if (ratio > prev_ratio * (1.0 + 1e-12))
      throw std::invalid_argument(
          "lorentz weight: Lambda_m/m must be non-increasing");
    prev_ratio = ratio;
  }
  return s;
}

SymSpace SymSpace::weak_lorentz(Weight w) {
  SymSpace s;
  s.kind_ = Kind::kWeakLorentz;
  s.weight_ = std::move(w);
  s.subsymmetric_ = false;  // quasi-norm: used as a test functional only
  return s;
}

SymSpace SymSpace::variation() {
  SymSpace s;
  s.kind_ = Kind::kVariation;
  s.subsymmetric_ = false;
  return s;
}

bool SymSpace::is_l1() const { return kind_ == Kind::kLp && p_ == 1.0; }

double SymSpace::norm(const Vec& f) const {
  switch (kind_) {
    case Kind::kLp: {
      if (p_ == kInf) return max_abs(f);
      if (p_ == 1.0) {
        double s = 0.0;
        for (double v : f) s += std::abs(v);
        return s;
      }
      if (p_ == 2.0) {
        double s = 0.0;
        for (double v : f) s += v * v;
        return std::sqrt(s);
      }
      double s = 0.0;
      for (double v : f) s += std::pow(std::abs(v), p_);
      return std::pow(s, 1.0 / p_);
    }
    case Kind::kLorentz: {
      const Vec a = rearrange_nonincreasing(f);
      double s = 0.0;
      for (std::size_t n = 0; n < a.size(); ++n) {
        if (a[n] == 0.0) break;
        s += std::pow(a[n], p_) * weight_->at(n + 1);
      }
      return std::pow(s, 1.0 / p_);
    }
    case Kind::kWeakLorentz: {
      const Vec a = rearrange_nonincreasing(f);
      double best = 0.0, wsum = 0.0;
      for (std::size_t n = 0; n < a.size(); ++n) {
        if (a[n] == 0.0) break;
        wsum += weight_->at(n + 1);
        best = std::max(best, a[n] * wsum);
      }
      return best;
    }
    case Kind::kVariation: {
      // |a_1| + sum_{j >= 2} |a_j - a_{j-1}| over the zero-padded extension.
      const std::size_t n = support_end(f);
      if (n == 0) return 0.0;
      double s = std::abs(f[0]);
      for (std::size_t j = 1; j < n; ++j) s += std::abs(f[j] - f[j - 1]);
      s += std::abs(f[n - 1]);  // drop back to zero after the support
      return s;
    }
  }
  return 0.0;
}

double SymSpace::lambda(std::size_t m) const {
  if (!subsymmetric_)
    throw std::domain_error("fundamental sequence needs a subsymmetric space");
  if (m == 0) return 0.0;
  switch (kind_) {
    case Kind::kLp:
      if (p_ == kInf) return 1.0;
      return std::pow(static_cast<double>(m), 1.0 / p_);
    case Kind::kLorentz:
      return std::pow(weight_->partial_sum(m), 1.0 / p_);
    default:
      break;
  }
  throw std::domain_error("fundamental sequence undefined for this space");
}

double SymSpace::lambda_star(std::size_t m) const {
  return static_cast<double>(m) / lambda(m);
}

std::string SymSpace::describe() const {
  switch (kind_) {
    case Kind::kLp:
      return p_ == kInf ? "c0" : "l" + fmt("%g", p_);
    case Kind::kLorentz:
      return "d_" + fmt("%g", p_) + "(" + weight_->describe() + ")";
    case Kind::kWeakLorentz:
      return "d_1^inf(" + weight_->describe() + ")";
    case Kind::kVariation:
      return "v1";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Dual-norm lower bound

DualBound dual_norm_lb(const SymSpace& space, const Vec& g, std::size_t budget,
                       std::uint64_t seed) {
  DualBound out;
  if (is_zero(g)) {
    out.exact = true;
    return out;
  }
  if (space.is_lp()) {
    const double p = space.p();
    out.exact = true;
    if (p == 1.0) {
      out.value = max_abs(g);
      // witness: sign at a maximal coordinate
      Vec w(g.size(), 0.0);
      for (std::size_t i = 0; i < g.size(); ++i)
        if (std::abs(g[i]) == out.value) {
          w[i] = g[i] >= 0 ? 1.0 : -1.0;
          break;
        }
      out.witness = w;
      return out;
    }
    if (p == kInf) {
      double s = 0.0;
      Vec w(g.size(), 0.0);
      for (std::size_t i = 0; i < g.size(); ++i) {
        s += std::abs(g[i]);
        w[i] = g[i] >= 0 ? 1.0 : (g[i] < 0 ? -1.0 : 0.0);
      }
      out.value = s;
      out.witness = w;
      return out;
    }
    const double q = p / (p - 1.0);
    double s = 0.0;
    for (double v : g) s += std::pow(std::abs(v), q);
    out.value = std::pow(s, 1.0 / q);
    // Hoelder extremizer f_i ~ sign(g_i) |g_i|^{q-1}, normalized in lp.
    Vec w(g.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i)
      w[i] = (g[i] >= 0 ? 1.0 : -1.0) * std::pow(std::abs(g[i]), q - 1.0);
    const double nrm = space.norm(w);
    if (nrm > 0)
      for (double& v : w) v /= nrm;
    out.witness = w;
    return out;
  }
  if (!space.subsymmetric())
    throw std::domain_error("dual bound needs a subsymmetric space");

  // By symmetry the optimum pairs the largest |f| with the largest |g| and
  // aligns signs, so optimize a non-negative non-increasing profile against
  // the rearrangement of g.
  const Vec gstar = rearrange_nonincreasing(g);
  const std::size_t n = support_end(gstar);
  auto value_of = [&](const Vec& profile) {
    const double nrm = space.norm(profile);
    if (nrm <= 0.0) return 0.0;
    return dot(profile, gstar) / nrm;
  };

  Vec best_profile;
  double best = 0.0;
  // Flat indicators 1_k / Lambda_k: guarantees value >= max_k G_k / Lambda_k.
  for (std::size_t k = 1; k <= n; ++k) {
    Vec profile(k, 1.0);
    const double v = value_of(profile);
    if (v > best) {
      best = v;
      best_profile = profile;
    }
  }
  // Seeded coordinate ascent with restarts.
  Rng rng(seed);
  const std::size_t restarts = budget == 0 ? 0 : std::max<std::size_t>(2, budget / 64);
  for (std::size_t r = 0; r < restarts; ++r) {
    Vec profile = best_profile;
    if (r % 2 == 1) {
      profile.assign(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) profile[i] = rng.uniform01();
      std::sort(profile.rbegin(), profile.rend());
    }
    double cur = value_of(profile);
    for (std::size_t sweep = 0; sweep < 24; ++sweep) {
      bool improved = false;
      for (std::size_t i = 0; i < profile.size(); ++i) {
        const double save = profile[i];
        const double span = std::max(1.0, max_abs(profile));
        double lo = 0.0, hi = save + span;
        for (int it = 0; it < 20; ++it) {
          const double m1 = lo + (hi - lo) * 0.381966;
          const double m2 = hi - (hi - lo) * 0.381966;
          profile[i] = m1;
          const double v1 = value_of(profile);
          profile[i] = m2;
          const double v2 = value_of(profile);
          if (v1 > v2)
            hi = m2;
          else
            lo = m1;
        }
        profile[i] = 0.5 * (lo + hi);
        const double v = value_of(profile);
        if (v > cur + 1e-15) {
          cur = v;
          improved = true;
        } else {
          profile[i] = save;
        }
      }
      if (!improved) break;
    }
    if (cur > best) {
      best = cur;
      best_profile = profile;
    }
  }
  out.value = best;
  out.exact = false;
  const double nrm = space.norm(best_profile);
  if (nrm > 0)
    for (double& v : best_profile) v /= nrm;
  out.witness = best_profile;
  return out;
}

// ---------------------------------------------------------------------------
// Regularity toolkit

std::optional<unsigned> check_lrp(const LambdaFn& lam, unsigned b_max,
                                  std::size_t m_max) {
  for (unsigned b = 1; b <= b_max; ++b) {
    bool ok = true;
    for (std::size_t m = 1; m <= m_max; ++m) {
      if (!(2.0 * lam(m) <= lam(b * m) * (1.0 + 1e-12))) {
        ok = false;
        break;
      }
    }
    if (ok) return b;
  }
  return std::nullopt;
}

std::optional<unsigned> check_urp(const LambdaFn& lam, unsigned b_max,
                                  std::size_t m_max) {
  for (unsigned b = 3; b <= b_max; ++b) {
    bool ok = true;
    for (std::size_t m = 1; m <= m_max; ++m) {
      if (!(lam(b * m) <= 0.5 * b * lam(m) * (1.0 + 1e-12))) {
        ok = false;
        break;
      }
    }
    if (ok) return b;
  }
  return std::nullopt;
}

double dini_constant(const LambdaFn& lam, std::size_t m_max) {
  double best = 0.0, partial = 0.0;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const double lm = lam(m);
    partial += lm / static_cast<double>(m);
    best = std::max(best, partial / lm);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Interleaving lift / pairwise retraction

Vec lifting_L(const Vec& f) {
  Vec out(2 * f.size(), 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) out[2 * i] = f[i];
  return out;
}

Vec retraction_T(const Vec& f) {
  const std::size_t pairs = (f.size() + 1) / 2;
  Vec out(pairs, 0.0);
  for (std::size_t i = 0; i < pairs; ++i) {
    const double odd = f[2 * i];
    const double even = 2 * i + 1 < f.size() ? f[2 * i + 1] : 0.0;
    out[i] = odd - even;
  }
  return out;
}

}  // namespace greedylab
