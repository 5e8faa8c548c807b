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

#include "greedylab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace greedylab {

Mat identity_matrix(std::size_t n) {
  Mat m(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

Mat matmul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  Mat out(n, Vec(p, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const double aij = a[i][j];
      if (aij == 0.0) continue;
      for (std::size_t l = 0; l < p; ++l) out[i][l] += aij * b[j][l];
    }
  return out;
}

Vec matvec(const Mat& a, const Vec& x) {
  Vec out(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0.0;
    const std::size_t n = std::min(a[i].size(), x.size());
    for (std::size_t j = 0; j < n; ++j) s += a[i][j] * x[j];
    out[i] = s;
  }
  return out;
}

Mat transpose(const Mat& a) {
  const std::size_t n = a.size(), m = n ? a[0].size() : 0;
  Mat out(m, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out[j][i] = a[i][j];
  return out;
}

Mat invert(const Mat& a) {
  const std::size_t n = a.size();
  Mat work = a;
  Mat inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(work[r][col]) > std::abs(work[pivot][col])) pivot = r;
    if (std::abs(work[pivot][col]) < 1e-14)
      throw std::runtime_error("invert: singular truncation matrix");
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const double d = work[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      work[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = work[r][col];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work[r][j] -= factor * work[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

double operator_norm_l1(const Mat& a) {
  const std::size_t n = a.size();
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::abs(a[i][j]);
    best = std::max(best, s);
  }
  return best;
}

double operator_norm_linf(const Mat& a) {
  double best = 0.0;
  for (const Vec& row : a) {
    double s = 0.0;
    for (double v : row) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

Vec symmetric_eigenvalues(Mat a) {
  const std::size_t n = a.size();
  for (std::size_t sweep = 0; sweep < 128; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-28) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  Vec eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  return eig;
}

double operator_norm_l2(const Mat& a) {
  const Mat gram = matmul(transpose(a), a);
  const Vec eig = symmetric_eigenvalues(gram);
  double top = 0.0;
  for (double v : eig) top = std::max(top, v);
  return std::sqrt(std::max(0.0, top));
}

Vec maximizer_l1(const Mat& a) {
  const std::size_t n = a.size();
  std::size_t best_col = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::abs(a[i][j]);
    if (s > best) {
      best = s;
      best_col = j;
    }
  }
  Vec x(n, 0.0);
  x[best_col] = 1.0;
  return x;
}

Vec maximizer_linf(const Mat& a) {
  const std::size_t n = a.size();
  std::size_t best_row = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (double v : a[i]) s += std::abs(v);
    if (s > best) {
      best = s;
      best_row = i;
    }
  }
  Vec x(n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    x[j] = a[best_row][j] >= 0.0 ? 1.0 : -1.0;
  return x;
}

Vec maximizer_l2(const Mat& a) {
  const std::size_t n = a.size();
  const Mat gram = matmul(transpose(a), a);
  // Power iteration with a deterministic dense start; the Gram matrix is PSD
  // so convergence to the top eigenvector is monotone in the Rayleigh
  // quotient. 512 rounds is far past what desk-scale dimensions need.
  Vec x(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 1.0 / static_cast<double>(i + 2);
  for (std::size_t it = 0; it < 512; ++it) {
    Vec y = matvec(gram, x);
    double nrm = 0.0;
    for (double v : y) nrm += v * v;
    nrm = std::sqrt(nrm);
    if (nrm < 1e-280) return x;
    for (double& v : y) v /= nrm;
    x = std::move(y);
  }
  return x;
}

}  // namespace greedylab
