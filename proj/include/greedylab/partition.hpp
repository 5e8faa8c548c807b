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

#ifndef GREEDYLAB_PARTITION_HPP
#define GREEDYLAB_PARTITION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "greedylab/fseq.hpp"

namespace greedylab {

// Ordered partition of the first M_R coordinates into consecutive blocks.
// Block r (0-based) is the half-open index interval [M(r), M(r+1)).
class Partition {
 public:
  explicit Partition(std::vector<std::size_t> block_sizes);

  // Blocks [2^{r}, 2^{r+1}-1] in 1-based labeling: sizes 1, 2, 4, ...
  static Partition dyadic(std::size_t blocks);

  std::size_t blocks() const { return sizes_.size(); }
  std::size_t block_size(std::size_t r) const { return sizes_[r]; }
  std::size_t cumulative(std::size_t r) const { return cum_[r]; }  // M_r, M_0=0
  std::size_t total() const { return cum_.back(); }                // M_R
  std::size_t block_begin(std::size_t r) const { return cum_[r]; }
  std::size_t block_end(std::size_t r) const { return cum_[r + 1]; }
  std::size_t block_of(std::size_t index) const;  // 0-based coordinate

  // Regularity validators, all finite-horizon.
  double c_sigma() const;        // max_r M_r / |sigma_r|
  double c_sigma_shift() const;  // max_r M_r / |sigma_{r+1}|
  double log_growth() const;     // max_r log(M_r) / r  (1-based r)

  std::string describe() const;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> cum_;  // size blocks()+1, cum_[0] = 0
};

}  // namespace greedylab

#endif  // GREEDYLAB_PARTITION_HPP
