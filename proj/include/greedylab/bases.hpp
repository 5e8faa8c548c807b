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

#ifndef GREEDYLAB_BASES_HPP
#define GREEDYLAB_BASES_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

#include "greedylab/linalg.hpp"
#include "greedylab/seqspace.hpp"

namespace greedylab {

// A basis is represented by the linear map taking a finite coefficient
// vector (a_j) to the ambient coordinates of sum_j a_j x_j, together with the
// ambient norm. All bases shipped here admit explicit finite such maps, which
// is what makes the exact matrix operator-norm paths possible.
class BasisRep {
 public:
  // Which exact route exists for coordinate-projection norms.
  enum class ExactPath {
    kNone,         // composite ambient; search only
    kLatticeDiag,  // to_ambient = identity into a 1-unconditional lattice
    kMatrixL1,     // ambient l1: exact norm = max column abs sum
    kMatrixL2,     // ambient l2: exact norm = top singular value
    kMatrixLinf,   // ambient c0/linf: exact norm = max row abs sum
  };

  std::string name;
  ExactPath exact = ExactPath::kNone;
  std::size_t dim_cap = 0;  // 0 = unbounded working range

  // || sum_j a_j x_j ||_X for the coefficient vector a.
  std::function<double(const Vec&)> coeff_norm;

  // ||x_j||, 0-based index.
  std::function<double(std::size_t)> vector_norm;

  // Coefficients -> ambient coordinates on the dim-truncation (dim x dim),
  // defined for the matrix-backed exact paths.
  std::function<Mat(std::size_t)> truncation_matrix;

  // Exact bound kappa(dim) with |a_j| <= kappa * ||sum a_k x_k|| for every
  // coefficient vector supported in [0, dim). For matrix paths this is the
  // largest dual norm of a row of the inverse truncation matrix.
  std::function<double(std::size_t)> coeff_functional_bound;

  double norm(const Vec& coeffs) const { return coeff_norm(coeffs); }

  double min_vector_norm(std::size_t dim) const;
  double max_vector_norm(std::size_t dim) const;
};

// Unit-vector system of a sequence space: to_ambient is the identity.
BasisRep unit_vector_basis(const SymSpace& space);

// Summing system in c0: ambient coordinate k of (a_j) is the tail sum
// sum_{j >= k} a_j; the norm is the max-abs of the tail sums. Conditional,
// with coordinate-projection norms growing linearly.
BasisRep summing_basis();

// Difference system in l1: ambient coordinate k is a_k - a_{k+1} (zero beyond
// the support). ||x_1|| = 1 and ||x_j|| = 2 for j >= 2.
BasisRep difference_basis();

// Interleaved direct sum: odd coefficient positions feed b0, even feed b1;
// the composite norm is the sum of the two ambient norms.
BasisRep direct_sum(const BasisRep& b0, const BasisRep& b1);

// Finite-section repeats of b0: copy r carries n_list[r] coefficients, normed
// by b0 on its own block, and the copies are combined in the lp sense
// (p = 0 means the c0/max combination). Coefficient indexes beyond the
// configured copies are a domain error.
BasisRep block_repeat(const BasisRep& b0, const std::vector<std::size_t>& n_list,
                      double p);

// max_r M_r / n_{r+1} with M_r = n_1 + ... + n_r; the growth validator for
// repeat schedules.
double repeat_schedule_ratio(const std::vector<std::size_t>& n_list);

}  // namespace greedylab

#endif  // GREEDYLAB_BASES_HPP
