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

#ifndef GREEDYLAB_GAUGE_HPP
#define GREEDYLAB_GAUGE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greedylab/bases.hpp"
#include "greedylab/partition.hpp"
#include "greedylab/seqspace.hpp"

namespace greedylab {

// Averaging projection: replaces each block of f by its block average.
Vec avg_projection(const Vec& f, const Partition& part);
// Complementary projection Q = Id - P.
Vec q_projection(const Vec& f, const Partition& part);

struct EmbeddingCheck {
  bool lower_ok = false;  // weak-Lorentz norm <= (1 + C_sigma) * gauge norm
  bool upper_ok = false;  // gauge norm <= (3 + C_sigma) * d1(w') norm
  bool w_upper_ok = true;  // gauge norm <= (3 + C_sigma) C_d * d1(w) norm,
                           // checked when Lambda has the LRP on the horizon
  bool w_upper_checked = false;
  double weak_lorentz_norm = 0.0;
  double lorentz_wprime_norm = 0.0;
  double lorentz_w_norm = 0.0;
  double gauge_norm = 0.0;
  double lower_slack = 0.0;  // rhs - lhs of the respective inequality
  double upper_slack = 0.0;
  double w_upper_slack = 0.0;
};

// Constants entering the tail-projection bound, computed on the configured
// block horizon. c1/c2 are the ratio and ratio-sum constants for Lambda*,
// c3/c4 the analogues for Lambda. kappa is the exact coefficient-functional
// bound of the seed basis on [0, blocks), nu_max/nu_min the extreme basis
// vector norms. c_a is assembled from these; for a normalized basis whose
// interval projections have norm one it reduces to
//   2 c1 c2 + max(5, 2 c3 c4)        (regular-weight route)
//   max(6, 3 c3 c4)                  (l1 route)
struct GaugeConstants {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;
  double kappa = 1.0;
  double nu_max = 1.0, nu_min = 1.0;
  double c_a = 0.0;
  bool l1_route = false;
  bool applicable = false;  // l1, or LRP+URP hold for Lambda at the horizon
  bool has_lrp = false;     // Lambda has the LRP on the horizon
  double c_d = 0.0;         // finite-horizon Dini constant (when has_lrp)
  std::string note;
};

struct TailProjectionCheck {
  bool bound_ok = false;       // ||S_A f|| <= c_a ||f|| in the gauge
  bool per_block_ok = false;   // block-functional bound, factor 2
  bool q_estimate_ok = false;  // Q-part bound, factors 5 and 2
  bool l1_block_ok = true;     // l1-specialized block bound (l1 spaces only)
  double ratio = 0.0;          // ||S_A f|| / ||f||
  double c_a = 0.0;
  double worst_slack = 0.0;    // smallest rhs - lhs among the checks
};

// The composite block gauge built from a seed basis B, a subsymmetric space S
// and an ordered partition sigma:
//   ||f|| = ||Q_sigma f||_S + || sum_n v*_n(f) x_n ||_X,
// where v_n is the Lambda-normalized indicator of block n and v*_n its
// biorthogonal block-average functional. Everything is evaluated exactly on
// the finite horizon covered by the partition.
class GaugeSpace {
 public:
  GaugeSpace(BasisRep basis, SymSpace space, Partition partition);

  const BasisRep& basis() const { return basis_; }
  const SymSpace& space() const { return space_; }
  const Partition& partition() const { return part_; }
  std::size_t dim() const { return part_.total(); }

  double lambda(std::size_t m) const { return space_.lambda(m); }
  double lambda_block(std::size_t r) const;  // Lambda_{|sigma_r|}

  // v*_n(f) for every block: (Lambda_{|sigma_n|} / |sigma_n|) * block sum.
  Vec v_coeffs(const Vec& f) const;

  // Lambda-normalized indicator of block r.
  Vec unit_block_vector(std::size_t r) const;

  double norm(const Vec& f) const;

  // Forward map H(f) = (Q_sigma f, (v*_n(f))_n) and its inverse
  // G(g, h) = g + sum h_n v_n, defined for g with vanishing block averages.
  std::pair<Vec, Vec> h_map(const Vec& f) const;
  Vec g_map(const Vec& g, const Vec& h) const;

  // Both commuting identities for a block-aligned set B = union of the listed
  // blocks: v*_n(S_B f) = v*_n(f) on selected blocks (0 elsewhere) and
  // S_B(Q f) = Q(S_B f). Returns the largest absolute defect.
  double commuting_defect(const Vec& f,
                          const std::vector<std::size_t>& block_ids) const;

  // Weights w = (Lambda_n - Lambda_{n-1}) and w' = (Lambda_n / n) driving the
  // two-sided embedding of the gauge between d_1^inf(w) and d_1(w').
  double weak_lorentz_w_norm(const Vec& f) const;
  double lorentz_w_norm(const Vec& f) const;
  double lorentz_wprime_norm(const Vec& f) const;

  EmbeddingCheck embedding_check(const Vec& f) const;

  GaugeConstants constants() const;  // cached after first call

  // Hypothesis: A sits inside blocks r, r+1, ... for some r with |A| <= M_r.
  // Throws std::domain_error when no such r exists.
  TailProjectionCheck tail_projection_check(const Vec& f, const IndexSet& a) const;

  std::string describe() const;

 private:
  BasisRep basis_;
  SymSpace space_;
  Partition part_;
  Vec lambda_block_;                  // Lambda_{|sigma_r|}, r = 0..R-1
  mutable std::optional<GaugeConstants> constants_;

  void require_in_range(const Vec& f) const;
};

// Bidemocracy bracket for the unit-vector system of a subsymmetric space:
// product of Lambda_m with the dual norm of the m-indicator functional.
// Exact for lp (Hoelder); otherwise a certified lower bound >= m is used on
// the dual side.
struct BidemocracyRow {
  std::size_t m = 0;
  double lambda = 0.0;
  double mu = 0.0;  // dual norm of the m-indicator (exact or lower bound)
  bool exact = false;
  double product = 0.0;
  Vec witness;  // feasible dual vector with <witness, 1_m> = mu
};
BidemocracyRow bidemocracy_row(const SymSpace& space, std::size_t m,
                               std::size_t budget, std::uint64_t seed);

}  // namespace greedylab

#endif  // GREEDYLAB_GAUGE_HPP
