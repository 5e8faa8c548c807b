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

#ifndef GREEDYLAB_SEQSPACE_HPP
#define GREEDYLAB_SEQSPACE_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "greedylab/fseq.hpp"

namespace greedylab {

// A weight is a sequence of strictly positive scalars, given either by a
// power law, a classical Lorentz formula, or an explicit finite list.
class Weight {
 public:
  static Weight power(double exponent);                 // w_m = m^exponent
  static Weight lorentz_classical(double p, double q);  // w_m = m^{q/p-1}
  static Weight explicit_list(Vec entries);

  double at(std::size_t m) const;  // 1-based; throws past an explicit list
  std::size_t max_index() const;   // SIZE_MAX when generated by a formula
  double partial_sum(std::size_t m) const;  // W_m = w_1 + ... + w_m
  std::string describe() const;

 private:
  enum class Kind { kPower, kLorentzClassical, kExplicit };
  Kind kind_ = Kind::kPower;
  double exponent_ = 0.0;
  Vec entries_;
  std::string label_;
};

// Descriptor + evaluator for the sequence-space norms used throughout:
//   lp        (1 <= p < infinity, or p = infinity meaning the c0 max norm)
//   lorentz   d_q(w): q-average of the non-increasing rearrangement against w
//   weak_lorentz d_1^inf(w): sup_m a*_m W_m (a quasi-norm; test functional)
//   variation v_1: |a_1| + sum_{j>=2} |a_j - a_{j-1}| over the zero-padded
//             infinite extension (the drop back to zero after the support
//             counts, which keeps trailing zeros harmless)
//
// The subsymmetric kinds (lp, lorentz) are symmetric under permutations and
// sign changes of the support and are 1-unconditional lattice norms.
class SymSpace {
 public:
  static SymSpace lp(double p);  // p = infinity accepted as the c0 norm
  static SymSpace c0();
  static SymSpace lorentz(double q, Weight w);
  static SymSpace weak_lorentz(Weight w);
  static SymSpace variation();

  double norm(const Vec& f) const;
  bool subsymmetric() const { return subsymmetric_; }
  bool lattice() const { return kind_ != Kind::kVariation; }
  bool is_l1() const;
  bool is_lp() const { return kind_ == Kind::kLp; }
  double p() const { return p_; }

  // Fundamental sequence of the unit-vector system: Lambda_m = norm of the
  // indicator of m coordinates, and Lambda*_m = m / Lambda_m. Subsymmetric
  // kinds only.
  double lambda(std::size_t m) const;
  double lambda_star(std::size_t m) const;

  std::string describe() const;

 private:
  enum class Kind { kLp, kLorentz, kWeakLorentz, kVariation };
  Kind kind_ = Kind::kLp;
  double p_ = 2.0;  // lp exponent, or lorentz q
  std::optional<Weight> weight_;
  bool subsymmetric_ = true;
};

// Certified lower bound on the dual norm sup{ <f,g> : ||f||_S <= 1 }.
// Exact (Hoelder) for lp; otherwise the candidate set always contains the
// normalized flat indicators 1_k / Lambda_k, so the value is at least
// max_k (g*_1 + ... + g*_k) / Lambda_k, improved by seeded coordinate ascent.
struct DualBound {
  double value = 0.0;
  bool exact = false;
  Vec witness;  // feasible f attaining value (norm 1 up to fp)
};
DualBound dual_norm_lb(const SymSpace& space, const Vec& g,
                       std::size_t budget, std::uint64_t seed);

// Regularity toolkit for a positive non-decreasing sequence m -> lambda_m.
// Finite-horizon verdicts only: a returned witness b certifies the property
// for all m <= m_max, not asymptotically.
using LambdaFn = std::function<double(std::size_t)>;

// Smallest b <= b_max with 2*lambda_m <= lambda_{b m} for all m <= m_max.
std::optional<unsigned> check_lrp(const LambdaFn& lam, unsigned b_max,
                                  std::size_t m_max);

// Smallest b in [3, b_max] with lambda_{b m} <= (b/2) lambda_m for all
// m <= m_max.
std::optional<unsigned> check_urp(const LambdaFn& lam, unsigned b_max,
                                  std::size_t m_max);

// Best finite-horizon Dini constant: max_{m <= m_max} of
// (sum_{n<=m} lambda_n / n) / lambda_m.
double dini_constant(const LambdaFn& lam, std::size_t m_max);

// Interleaving lift and pairwise-difference retraction:
//   L(a) = (a_1, 0, a_2, 0, ...),  T(a) = (a_1 - a_2, a_3 - a_4, ...).
// T(L(f)) = f exactly for every f.
Vec lifting_L(const Vec& f);
Vec retraction_T(const Vec& f);

}  // namespace greedylab

#endif  // GREEDYLAB_SEQSPACE_HPP
