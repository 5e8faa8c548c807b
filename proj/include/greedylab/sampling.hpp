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

#ifndef GREEDYLAB_SAMPLING_HPP
#define GREEDYLAB_SAMPLING_HPP

#include <cstdint>
#include <cstddef>

#include "greedylab/fseq.hpp"

namespace greedylab {

// Deterministic, platform-independent generator. All randomized estimators
// take an explicit seed and derive per-sample streams from it, so reports are
// reproducible bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform01();                         // in [0, 1)
  double uniform(double lo, double hi);       // in [lo, hi)
  std::size_t uniform_index(std::size_t n);   // in [0, n)
  double sign();                              // +1 or -1

  // Independent stream for sample k derived from this generator's seed.
  Rng fork(std::uint64_t k) const;

 private:
  std::uint64_t state_;
};

// Symmetric heavy-tailed coordinates: uniform signs times a 50/50 mixture of
// uniform-(0,1] and reciprocal-rank magnitudes. Stresses the
// rearrangement-sensitive norms more than plain uniform noise.
Vec sample_heavy_tailed(std::size_t dim, Rng& rng);

// Same mixture restricted to the coordinate window [begin, end).
Vec sample_heavy_tailed_window(std::size_t dim, std::size_t begin,
                               std::size_t end, Rng& rng);

// Random subset of [0, n) of the given size (without replacement).
IndexSet sample_subset(std::size_t n, std::size_t size, Rng& rng);

}  // namespace greedylab

#endif  // GREEDYLAB_SAMPLING_HPP
