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

#ifndef GREEDYLAB_LINALG_HPP
#define GREEDYLAB_LINALG_HPP

#include <cstddef>
#include <vector>

#include "greedylab/fseq.hpp"

namespace greedylab {

// Dense row-major matrix, sized for desk-scale truncations (n <= a few
// hundred). Not a general linear-algebra layer.
using Mat = std::vector<Vec>;

Mat identity_matrix(std::size_t n);
Mat matmul(const Mat& a, const Mat& b);
Vec matvec(const Mat& a, const Vec& x);
Mat transpose(const Mat& a);

// Gauss-Jordan with partial pivoting. Throws std::runtime_error on a
// (numerically) singular input.
Mat invert(const Mat& a);

// Exact operator norms of a square matrix acting on R^n.
double operator_norm_l1(const Mat& a);    // max column abs sum
double operator_norm_linf(const Mat& a);  // max row abs sum
double operator_norm_l2(const Mat& a);    // largest singular value

// Unit-norm input achieving the respective operator norm (for l2 this is the
// top right singular vector, computed to ~1e-12).
Vec maximizer_l1(const Mat& a);
Vec maximizer_linf(const Mat& a);
Vec maximizer_l2(const Mat& a);

// Eigenvalues of a symmetric matrix via cyclic Jacobi sweeps.
Vec symmetric_eigenvalues(Mat a);

}  // namespace greedylab

#endif  // GREEDYLAB_LINALG_HPP
