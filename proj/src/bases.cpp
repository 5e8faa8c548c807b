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

#include "greedylab/bases.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace greedylab {

double BasisRep::min_vector_norm(std::size_t dim) const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < dim; ++j) m = std::min(m, vector_norm(j));
  return dim == 0 ? 1.0 : m;
}

double BasisRep::max_vector_norm(std::size_t dim) const {
  double m = 0.0;
  for (std::size_t j = 0; j < dim; ++j) m = std::max(m, vector_norm(j));
  return dim == 0 ? 1.0 : m;
}

BasisRep unit_vector_basis(const SymSpace& space) {
  BasisRep b;
  b.name = "unit[" + space.describe() + "]";
  b.exact = space.lattice() ? BasisRep::ExactPath::kLatticeDiag
                            : BasisRep::ExactPath::kNone;
  b.coeff_norm = [space](const Vec& a) { return space.norm(a); };
  b.vector_norm = [space](std::size_t) {
    return space.norm(Vec{1.0});
  };
  b.truncation_matrix = [](std::size_t dim) { return identity_matrix(dim); };
  const double e1 = space.norm(Vec{1.0});
  const bool lattice = space.lattice();
  b.coeff_functional_bound = [e1, lattice](std::size_t) {
    return lattice ? 1.0 / e1 : 1.0;
  };
  return b;
}

BasisRep summing_basis() {
  BasisRep b;
  b.name = "summing";
  b.exact = BasisRep::ExactPath::kMatrixLinf;
  b.coeff_norm = [](const Vec& a) {
    double tail = 0.0, best = 0.0;
    for (std::size_t k = a.size(); k-- > 0;) {
      tail += a[k];
      best = std::max(best, std::abs(tail));
    }
    return best;
  };
  b.vector_norm = [](std::size_t) { return 1.0; };
  b.truncation_matrix = [](std::size_t dim) {
    Mat m(dim, Vec(dim, 0.0));
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t j = k; j < dim; ++j) m[k][j] = 1.0;
    return m;
  };
  b.coeff_functional_bound = [](std::size_t dim) {
    // a_k = t_k - t_{k+1}; exact bound 2 for dim >= 2.
    return dim >= 2 ? 2.0 : 1.0;
  };
  return b;
}

BasisRep difference_basis() {
  BasisRep b;
  b.name = "difference";
  b.exact = BasisRep::ExactPath::kMatrixL1;
  b.coeff_norm = [](const Vec& a) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const double next = k + 1 < a.size() ? a[k + 1] : 0.0;
      s += std::abs(a[k] - next);
    }
    return s;
  };
  b.vector_norm = [](std::size_t j) { return j == 0 ? 1.0 : 2.0; };
  b.truncation_matrix = [](std::size_t dim) {
    Mat m(dim, Vec(dim, 0.0));
    for (std::size_t k = 0; k < dim; ++k) {
      m[k][k] = 1.0;
      if (k + 1 < dim) m[k][k + 1] = -1.0;
    }
    return m;
  };
  b.coeff_functional_bound = [](std::size_t) { return 1.0; };
  return b;
}

BasisRep direct_sum(const BasisRep& b0, const BasisRep& b1) {
  BasisRep b;
  b.name = b0.name + "+" + b1.name;
  b.exact = BasisRep::ExactPath::kNone;
  if (b0.dim_cap != 0 || b1.dim_cap != 0) {
    const std::size_t c0 = b0.dim_cap ? b0.dim_cap : std::numeric_limits<std::size_t>::max() / 2;
    const std::size_t c1 = b1.dim_cap ? b1.dim_cap : std::numeric_limits<std::size_t>::max() / 2;
    b.dim_cap = 2 * std::min(c0, c1);
  }
  auto split = [](const Vec& a) {
    Vec f0((a.size() + 1) / 2, 0.0), f1(a.size() / 2, 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k % 2 == 0)
        f0[k / 2] = a[k];
      else
        f1[k / 2] = a[k];
    }
    return std::make_pair(f0, f1);
  };
  b.coeff_norm = [b0, b1, split](const Vec& a) {
    auto [f0, f1] = split(a);
    return b0.coeff_norm(f0) + b1.coeff_norm(f1);
  };
  b.vector_norm = [b0, b1](std::size_t j) {
    return j % 2 == 0 ? b0.vector_norm(j / 2) : b1.vector_norm(j / 2);
  };
  b.coeff_functional_bound = [b0, b1](std::size_t dim) {
    const std::size_t half = (dim + 1) / 2;
    return std::max(b0.coeff_functional_bound(half),
                    b1.coeff_functional_bound(half));
  };
  return b;
}

BasisRep block_repeat(const BasisRep& b0, const std::vector<std::size_t>& n_list,
                      double p) {
  if (n_list.empty()) throw std::invalid_argument("block_repeat: no copies");
  for (std::size_t n : n_list)
    if (n == 0) throw std::invalid_argument("block_repeat: copy sizes must be positive");
  if (p != 0.0 && !(p >= 1.0))
    throw std::invalid_argument("block_repeat: p must be 0 or >= 1");
  std::vector<std::size_t> offsets(n_list.size() + 1, 0);
  for (std::size_t r = 0; r < n_list.size(); ++r)
    offsets[r + 1] = offsets[r] + n_list[r];

  BasisRep b;
  b.name = "repeat[" + b0.name + "]";
  b.exact = BasisRep::ExactPath::kNone;
  b.dim_cap = offsets.back();
  const std::size_t max_copy = *std::max_element(n_list.begin(), n_list.end());
  b.coeff_norm = [b0, offsets, p](const Vec& a) {
    if (support_end(a) > offsets.back())
      throw std::domain_error("block_repeat: coefficient beyond configured copies");
    double acc = 0.0;
    for (std::size_t r = 0; r + 1 < offsets.size(); ++r) {
      const std::size_t lo = offsets[r], hi = std::min(offsets[r + 1], a.size());
      if (lo >= a.size()) break;
      Vec slice(a.begin() + static_cast<std::ptrdiff_t>(lo),
                a.begin() + static_cast<std::ptrdiff_t>(hi));
      const double v = b0.coeff_norm(slice);
      if (p == 0.0)
        acc = std::max(acc, v);
      else if (p == 1.0)
        acc += v;
      else
        acc += std::pow(v, p);
    }
    return (p == 0.0 || p == 1.0) ? acc : std::pow(acc, 1.0 / p);
  };
  b.vector_norm = [b0, offsets](std::size_t k) {
    if (k >= offsets.back())
      throw std::domain_error("block_repeat: index beyond configured copies");
    std::size_t r = 0;
    while (offsets[r + 1] <= k) ++r;
    return b0.vector_norm(k - offsets[r]);
  };
  b.coeff_functional_bound = [b0, max_copy](std::size_t) {
    return b0.coeff_functional_bound(max_copy);
  };
  return b;
}

double repeat_schedule_ratio(const std::vector<std::size_t>& n_list) {
  double best = 0.0;
  std::size_t cum = 0;
  for (std::size_t r = 0; r + 1 < n_list.size(); ++r) {
    cum += n_list[r];
    best = std::max(best, static_cast<double>(cum) /
                              static_cast<double>(n_list[r + 1]));
  }
  return best;
}

}  // namespace greedylab
