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

#include "greedylab/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace greedylab {

// splitmix64: small state, full-period, identical on every platform.
std::uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

std::size_t Rng::uniform_index(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform_index: empty range");
  return static_cast<std::size_t>(next_u64() % n);
}

double Rng::sign() { return (next_u64() & 1ULL) ? 1.0 : -1.0; }

Rng Rng::fork(std::uint64_t k) const {
  Rng probe(state_ ^ (0xd1b54a32d192ed03ULL * (k + 1)));
  probe.next_u64();
  return probe;
}

Vec sample_heavy_tailed(std::size_t dim, Rng& rng) {
  return sample_heavy_tailed_window(dim, 0, dim, rng);
}

Vec sample_heavy_tailed_window(std::size_t dim, std::size_t begin,
                               std::size_t end, Rng& rng) {
  Vec f(dim, 0.0);
  for (std::size_t i = begin; i < end && i < dim; ++i) {
    const double u = rng.uniform01();
    double mag;
    if (rng.next_u64() & 1ULL) {
      mag = 1.0 - u;  // uniform on (0, 1]
    } else {
      mag = 1.0 / static_cast<double>(1 + rng.uniform_index(std::max<std::size_t>(dim, 1)));
    }
    f[i] = rng.sign() * mag;
  }
  return f;
}

IndexSet sample_subset(std::size_t n, std::size_t size, Rng& rng) {
  if (size > n) size = n;
  // Partial Fisher-Yates on an index table.
  IndexSet pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + rng.uniform_index(n - i);
    std::swap(pool[i], pool[j]);
  }
  IndexSet out(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace greedylab
