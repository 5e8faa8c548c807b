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

#ifndef GREEDYLAB_GREEDY_HPP
#define GREEDYLAB_GREEDY_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "greedylab/gauge.hpp"
#include "greedylab/seqspace.hpp"

namespace greedylab {

// A norm evaluator together with the structure flags the estimators exploit.
// Exactly one of sym/gauge may be set; both null means a bare norm function.
struct NormHandle {
  std::string name;
  std::function<double(const Vec&)> norm;
  const SymSpace* sym = nullptr;
  const GaugeSpace* gauge = nullptr;
  bool one_unconditional = false;

  static NormHandle of(const SymSpace& s);
  static NormHandle of(const GaugeSpace& y);
};

// Indices of the m largest-magnitude coefficients, smallest index first on
// ties. Returns the full support when m exceeds it.
IndexSet greedy_set(const Vec& f, std::size_t m);

// Greedy ordering of all of [0, f.size()): by decreasing magnitude, ties by
// index. Greedy sets are its prefixes, so they are nested by construction.
IndexSet greedy_ordering(const Vec& f);

struct GreedyWitness {
  Vec f;
  std::size_t m = 0;
  double ratio = 0.0;
};

struct QgEstimate {
  double max_residual_ratio = 0.0;     // max ||f - S_F f|| / ||f||
  double max_projection_ratio = 0.0;   // max ||S_F f|| / ||f||
  double max_partial_sum_ratio = 0.0;  // max ||f - S_m f|| / ||f|| (plain
                                       // prefixes; the uniform C_b estimate)
  GreedyWitness residual_witness;
  GreedyWitness projection_witness;
};

// Maximum of both quasi-greedy ratios over seeded samples and every greedy
// set from the full ordering. Witnesses re-evaluate to the reported maxima.
QgEstimate qg_ratio_estimate(const NormHandle& normer, std::size_t dim,
                             std::size_t trials, std::uint64_t seed);

struct PhiResult {
  double value = 0.0;       // certified lower bound (exact when flagged)
  bool exact = false;
  double upper_bound = 0.0; // embedding-derived cap for gauge normers; 0 if n/a
  IndexSet witness_set;
};

// Fundamental function sup_{|A| <= m} || sum_{j in A} e_j ||. Exact for
// subsymmetric normers (symmetry gives Lambda_m); exact by enumeration for
// small dimensions; otherwise block-aligned, interval and random search.
PhiResult fundamental_phi(const NormHandle& normer, std::size_t m,
                          std::size_t dim, bool exact,
                          std::size_t budget, std::uint64_t seed);

struct SuperDemocracyResult {
  double ratio = 1.0;  // max/min over sampled sign-indicators of size m
  bool exact = false;
  double cap = 0.0;    // embedding-derived upper bound for gauges; 0 if n/a
};

SuperDemocracyResult superdemocracy_ratio(const NormHandle& normer,
                                          std::size_t m, std::size_t dim,
                                          std::size_t trials,
                                          std::uint64_t seed);

// Exhaustive small-dimension almost-greedy ratio:
// max over samples and m of ||f - S_{F_m} f|| / min_{|A| <= m} ||f - S_A f||,
// the inner minimum enumerated over all subsets of [0, dim). dim <= 12.
double almost_greedy_ratio_smallcase(const NormHandle& normer,
                                     std::size_t dim, std::size_t trials,
                                     std::uint64_t seed);

}  // namespace greedylab

#endif  // GREEDYLAB_GREEDY_HPP
