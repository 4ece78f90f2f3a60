/*
 * Copyright 2026 The MPCA Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MPCA_TESTS_TEST_UTIL_HPP_
#define MPCA_TESTS_TEST_UTIL_HPP_

#include <mpca/numerics.hpp>

#include <cmath>
#include <cstdint>
#include <random>

namespace mpca::testing {

inline Matrix random_matrix(Eigen::Index m, Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Matrix a(m, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) a(i, j) = normal(rng);
  }
  return a;
}

inline Vector random_positive(Eigen::Index n, std::uint64_t seed, double lo = 0.05, double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(lo, hi);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = uniform(rng);
  return v;
}

// max over columns of min(|a_j - b_j|, |a_j + b_j|) entrywise.
inline double max_diff_up_to_sign(const Matrix& a, const Matrix& b) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const double plus = (a.col(j) - b.col(j)).cwiseAbs().maxCoeff();
    const double minus = (a.col(j) + b.col(j)).cwiseAbs().maxCoeff();
    worst = std::max(worst, std::min(plus, minus));
  }
  return worst;
}

// Singular values from the eigenvalues of the smaller Gram matrix, sorted
// non-increasing. Independent of the SVD code path.
inline Vector gram_singular_values(const Matrix& a) {
  const Matrix gram = a.rows() <= a.cols() ? Matrix(a * a.transpose()) : Matrix(a.transpose() * a);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
  Vector ev = eig.eigenvalues().reverse();
  return ev.cwiseMax(0.0).cwiseSqrt();
}

}  // namespace mpca::testing

#endif  // MPCA_TESTS_TEST_UTIL_HPP_
