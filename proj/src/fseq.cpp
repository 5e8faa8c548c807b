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

#include "greedylab/fseq.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace greedylab {

Vec trimmed(const Vec& f) {
  std::size_t n = f.size();
  while (n > 0 && f[n - 1] == 0.0) --n;
  return Vec(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(n));
}

Vec rearrange_nonincreasing(const Vec& f) {
  Vec out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::abs(f[i]);
  std::stable_sort(out.begin(), out.end(), [](double a, double b) { return a > b; });
  return out;
}

std::size_t support_size(const Vec& f) {
  std::size_t n = 0;
  for (double v : f)
    if (v != 0.0) ++n;
  return n;
}

std::size_t support_end(const Vec& f) {
  std::size_t n = f.size();
  while (n > 0 && f[n - 1] == 0.0) --n;
  return n;
}

bool is_zero(const Vec& f) { return support_end(f) == 0; }

double max_abs(const Vec& f) {
  double m = 0.0;
  for (double v : f) m = std::max(m, std::abs(v));
  return m;
}

double dot(const Vec& a, const Vec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

Vec add_scaled(const Vec& a, double alpha, const Vec& b) {
  Vec out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += alpha * b[i];
  return out;
}

Vec coordinate_projection(const Vec& f, const IndexSet& keep) {
  Vec out(f.size(), 0.0);
  for (std::size_t j : keep)
    if (j < f.size()) out[j] = f[j];
  return out;
}

Vec coordinate_projection_complement(const Vec& f, const IndexSet& keep) {
  Vec out = f;
  for (std::size_t j : keep)
    if (j < out.size()) out[j] = 0.0;
  return out;
}

}  // namespace greedylab
