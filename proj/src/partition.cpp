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

#include "greedylab/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace greedylab {

Partition::Partition(std::vector<std::size_t> block_sizes)
    : sizes_(std::move(block_sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("partition needs blocks");
  for (std::size_t s : sizes_)
    if (s == 0) throw std::invalid_argument("block sizes must be >= 1");
  cum_.assign(sizes_.size() + 1, 0);
  for (std::size_t r = 0; r < sizes_.size(); ++r)
    cum_[r + 1] = cum_[r] + sizes_[r];
}

Partition Partition::dyadic(std::size_t blocks) {
  if (blocks == 0 || blocks > 40)
    throw std::invalid_argument("dyadic partition: blocks in [1, 40]");
  std::vector<std::size_t> sizes(blocks);
  for (std::size_t r = 0; r < blocks; ++r) sizes[r] = std::size_t{1} << r;
  return Partition(std::move(sizes));
}

std::size_t Partition::block_of(std::size_t index) const {
  if (index >= total())
    throw std::domain_error("coordinate beyond the partitioned range");
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), index);
  return static_cast<std::size_t>(it - cum_.begin()) - 1;
}

double Partition::c_sigma() const {
  double best = 0.0;
  for (std::size_t r = 0; r < blocks(); ++r)
    best = std::max(best, static_cast<double>(cum_[r + 1]) /
                              static_cast<double>(sizes_[r]));
  return best;
}

double Partition::c_sigma_shift() const {
  double best = 0.0;
  for (std::size_t r = 0; r + 1 < blocks(); ++r)
    best = std::max(best, static_cast<double>(cum_[r + 1]) /
                              static_cast<double>(sizes_[r + 1]));
  return best;
}

double Partition::log_growth() const {
  double best = 0.0;
  for (std::size_t r = 0; r < blocks(); ++r)
    best = std::max(best, std::log(static_cast<double>(cum_[r + 1])) /
                              static_cast<double>(r + 1));
  return best;
}

std::string Partition::describe() const {
  bool dyad = true;
  for (std::size_t r = 0; r < blocks(); ++r)
    if (sizes_[r] != (std::size_t{1} << r)) {
      dyad = false;
      break;
    }
  if (dyad) return "dyadic(" + std::to_string(blocks()) + ")";
  std::string out = "blocks(";
  for (std::size_t r = 0; r < blocks(); ++r) {
    if (r) out += ",";
    out += std::to_string(sizes_[r]);
  }
  return out + ")";
}

}  // namespace greedylab
