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

#ifndef GREEDYLAB_FSEQ_HPP
#define GREEDYLAB_FSEQ_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace greedylab {

// A finitely supported scalar sequence. Entry i of the vector is coordinate
// i+1 of the sequence; everything beyond the stored length is zero, and
// trailing zeros never change a norm value.
using Vec = std::vector<double>;

using IndexSet = std::vector<std::size_t>;  // 0-based coordinate indices

// Drops trailing zeros (exact zeros only).
Vec trimmed(const Vec& f);

// |values| sorted non-increasingly; stable on ties. Length is preserved.
Vec rearrange_nonincreasing(const Vec& f);

std::size_t support_size(const Vec& f);

// 1 + largest index with a nonzero entry; 0 for the zero sequence.
std::size_t support_end(const Vec& f);

bool is_zero(const Vec& f);

double max_abs(const Vec& f);

double dot(const Vec& a, const Vec& b);

Vec add_scaled(const Vec& a, double alpha, const Vec& b);  // a + alpha*b

// Keeps the coordinates listed in `keep` (0-based), zeroes the rest.
Vec coordinate_projection(const Vec& f, const IndexSet& keep);

// Complement of `keep` inside [0, f.size()).
Vec coordinate_projection_complement(const Vec& f, const IndexSet& keep);

}  // namespace greedylab

#endif  // GREEDYLAB_FSEQ_HPP
