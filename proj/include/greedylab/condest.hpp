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

#ifndef GREEDYLAB_CONDEST_HPP
#define GREEDYLAB_CONDEST_HPP

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "greedylab/bases.hpp"
#include "greedylab/gauge.hpp"

namespace greedylab {

// Exhaustive enumeration cap: exact suprema over subsets stop at 2^20 sets.
inline constexpr std::size_t kMaxExactSubsets = std::size_t{1} << 20;
inline constexpr std::size_t kMaxExactLm = 20;

struct SearchBudget {
  std::size_t random_sets = 64;    // extra random subsets tried per target
  std::size_t starts = 3;          // ascent restarts per subset
  std::size_t sweeps = 12;         // coordinate sweeps per start
  std::size_t line_evals = 16;     // golden-section evaluations per coordinate
};

struct ProjNormResult {
  double value = 0.0;
  bool exact = false;
  Vec witness_f;        // coefficients achieving value (when known)
  IndexSet witness_set; // the projection set A (0-based)
};

using WitnessCandidate = std::pair<Vec, IndexSet>;

// Re-evaluates ||S_A f|| / ||f|| for the stored witness under the basis norm.
double witness_ratio(const BasisRep& basis, const WitnessCandidate& w);

// Norm of f -> S_A f on the dim-truncation of the basis. Exact when the
// ambient admits a matrix route (l1 / l2 / linf column, singular value, row
// formulas) or when to_ambient is the identity into a lattice norm; otherwise
// a certified lower bound found by seeded coordinate ascent.
ProjNormResult proj_operator_norm(const BasisRep& basis, const IndexSet& a,
                                  std::size_t dim, const SearchBudget& budget,
                                  std::uint64_t seed);

// sup over A of the projection norm restricted to vectors supported in the
// first m coordinates. Exact mode enumerates all subsets of [0, m) and
// requires m <= 20; search mode tries intervals, the alternating set and its
// complement, block-style sets, seeded random subsets, and any caller-provided
// witness candidates (their ratios certify the reported lower bound).
ProjNormResult compute_L_m(const BasisRep& basis, std::size_t m, bool exact,
                           const SearchBudget& budget, std::uint64_t seed,
                           const std::vector<WitnessCandidate>& extra = {});

// sup over |A| <= m inside [0, dim) of the projection norm on the
// dim-truncation. Exact mode enumerates subsets of size <= m under the
// global subset cap.
ProjNormResult compute_k_m(const BasisRep& basis, std::size_t m,
                           std::size_t dim, bool exact,
                           const SearchBudget& budget, std::uint64_t seed);

// Unit-vector system of a gauge space packaged as a BasisRep (search paths
// only). The returned object references `y`, which must outlive it.
BasisRep gauge_unit_basis(const GaugeSpace& y);

// Lower bound for the conditionality constant of the gauge space at
// m = M_r via constant-on-blocks transfer: for coefficients (a_n) on the
// first r blocks, the vector with value a_n / Lambda_{|sigma_n|} on block n
// has vanishing Q-part, its gauge norm equals ||sum a_n x_n||_X exactly, and
// block-aligned projections reproduce the seed-basis ratios. The best seed
// witness (exact when r <= 20) plus sampled (a, A) pairs are evaluated
// directly in the gauge, so the returned value is certified by its witness.
ProjNormResult gauge_witness_lower_bound(const GaugeSpace& y, std::size_t r,
                                         const SearchBudget& budget,
                                         std::uint64_t seed);

// Builds the constant-on-blocks vector for seed coefficients (a_n).
Vec block_witness_vector(const GaugeSpace& y, const Vec& seed_coeffs);

struct GrowthFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // rms residual
};

// Least-squares fit of value against (log m)^log_power. Needs >= 3 points
// with distinct abscissas.
GrowthFit log_growth_fit(const std::vector<std::pair<double, double>>& table,
                         double log_power = 1.0);

}  // namespace greedylab

#endif  // GREEDYLAB_CONDEST_HPP
