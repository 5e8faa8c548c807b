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

#ifndef GREEDYLAB_SUITES_HPP
#define GREEDYLAB_SUITES_HPP

#include <cstdint>
#include <cstddef>

#include "greedylab/gauge.hpp"
#include "greedylab/partition.hpp"
#include "greedylab/seqspace.hpp"

namespace greedylab {

// Per-vector inequality sweeps shared by the verify command and the
// acceptance suite. Each sweep draws seeded samples, checks the inequality
// with its pinned constant, and reports the count of violations together
// with the smallest observed slack (rhs - lhs; negative means a violation).
struct SweepResult {
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst_slack = 0.0;
  double max_ratio = 0.0;  // largest lhs/rhs seen, when meaningful

  void record(double lhs, double rhs, double tol = 1e-9);
};

// ||P f||_S <= 2 ||f||_S and ||Q f||_S <= 3 ||f||_S on random vectors.
SweepResult averaging_projection_sweep(const SymSpace& space,
                                       const Partition& part, std::size_t dim,
                                       std::size_t trials, std::uint64_t seed);

// ||f||_S <= gauge(f) <= 5 ||f||_S on block-supported vectors (normalized
// seed bases; otherwise the constants are scaled by the extreme basis-vector
// norms).
SweepResult sandwich_sweep(const GaugeSpace& y, std::size_t trials,
                           std::uint64_t seed);

// Two-sided embedding with constants (1 + C_sigma) and (3 + C_sigma), on
// random vectors plus structured stress vectors (block indicators and
// constant-on-blocks vectors with extreme seed coefficients).
SweepResult embedding_sweep(const GaugeSpace& y, std::size_t trials,
                            std::uint64_t seed);

// Both block-alignment identities, exact to the given tolerance.
SweepResult commuting_sweep(const GaugeSpace& y, std::size_t trials,
                            std::uint64_t seed, double tol);

// G(H(f)) = f and H(G(g, h)) = (g, h), exact to the given tolerance.
SweepResult roundtrip_sweep(const GaugeSpace& y, std::size_t trials,
                            std::uint64_t seed, double tol);

// Tail-projection bound with the assembled constant, on hypothesis-respecting
// (f, A) pairs; also enforces the supporting per-block and Q-part estimates.
SweepResult tail_projection_sweep(const GaugeSpace& y, std::size_t trials,
                                  std::uint64_t seed);

// |v*_n(S_A f)| <= 2 (Lambda*_|A| / Lambda*_|sigma_n|) ||S_{sigma_n} f||_S
// for A inside one block.
SweepResult block_functional_sweep(const GaugeSpace& y, std::size_t trials,
                                   std::uint64_t seed);

// l1 specialization of the block-functional bound.
SweepResult block_functional_l1_sweep(const GaugeSpace& y, std::size_t trials,
                                      std::uint64_t seed);

// ||Q(S_A f)||_S <= 5 ||Q f||_S + 2 sum_n (Lambda_|A_n| / Lambda_|sigma_n|)
// |v*_n(f)| for arbitrary A.
SweepResult q_estimate_sweep(const GaugeSpace& y, std::size_t trials,
                             std::uint64_t seed);

// Weighted-mean bound for the fundamental sequence:
// (k/(k+n)) Lambda_n + (n/(k+n)) Lambda_k <= 2 Lambda_k for k, n <= m_max.
SweepResult lambda_mean_sweep(const SymSpace& space, std::size_t m_max);

// Interleaving lift / pairwise retraction facts on random vectors. The lift
// clause asserts ||L f||_v1 <= ||f||_1 as stated; the measured sharp factor
// is reported separately (it is exactly 2 for every nonzero vector).
struct LiftRetractionSweep {
  std::size_t samples = 0;
  std::size_t roundtrip_violations = 0;  // T(L(f)) != f
  std::size_t lift_violations = 0;       // ||L f||_v1 > ||f||_1
  std::size_t retraction_l1_violations = 0;
  std::size_t retraction_sup_violations = 0;
  double max_lift_factor = 0.0;  // max ||L f||_v1 / ||f||_1
};
LiftRetractionSweep lift_retraction_sweep(std::size_t dim, std::size_t trials,
                                          std::uint64_t seed);

}  // namespace greedylab

#endif  // GREEDYLAB_SUITES_HPP
