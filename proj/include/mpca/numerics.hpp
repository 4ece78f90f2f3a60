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

// Dense linear algebra shared by the fitting and evaluation code. Columns of a
// DataMatrix are samples, rows are features.

#ifndef MPCA_NUMERICS_HPP_
#define MPCA_NUMERICS_HPP_

#include <Eigen/Dense>

#include <cstddef>
#include <utility>

namespace mpca {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Singular values at or below this fraction of the largest one are treated as
// zero wherever the code divides by them.
inline constexpr double kRankTolerance = 1e-12;

// m x n matrix of finite doubles, m >= 1 and n >= 1. Immutable once built.
class DataMatrix {
 public:
  // Throws ArgumentError on empty shape or any NaN/Inf entry.
  explicit DataMatrix(Matrix values);

  static DataMatrix FromRows(std::initializer_list<std::initializer_list<double>> rows);

  const Matrix& values() const noexcept { return values_; }
  Eigen::Index rows() const noexcept { return values_.rows(); }
  Eigen::Index cols() const noexcept { return values_.cols(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return values_(i, j); }

  DataMatrix transposed() const { return DataMatrix(values_.transpose()); }

 private:
  Matrix values_;
};

// Per-feature mean of a DataMatrix; length equals the source row count.
struct MeanVector {
  Vector values;
};

struct SvdResult {
  Matrix left_vectors;     // m x r, orthonormal columns
  Vector singular_values;  // r, non-increasing, >= 0
  Matrix right_vectors;    // n x r, orthonormal columns
};

// Subtracts the per-row mean from every column.
std::pair<DataMatrix, MeanVector> center_columns(const DataMatrix& x);

// Thin SVD truncated to the leading `rank` triplets. Each left singular vector
// is oriented so that its largest-magnitude entry is positive (first such entry
// on ties); right vectors follow. Throws ArgumentError unless
// 1 <= rank <= min(m, n) and NumericalError if the decomposition fails.
SvdResult svd(const DataMatrix& a, Eigen::Index rank);
SvdResult svd(const Matrix& a, Eigen::Index rank);

double frobenius_norm(const DataMatrix& a);

// Flips column signs so the largest-magnitude entry of each column of `left` is
// positive, applying the same flips to `right` (which may be empty).
void orient_columns(Matrix& left, Matrix* right);

// Sine of the largest principal angle between the spans of two matrices with
// orthonormal columns, computed as the spectral norm of (I - B B^T) A. Stays
// accurate for tiny angles where acos of a cosine would not.
double largest_principal_angle_sine(const Matrix& a, const Matrix& b);

// Largest principal angle in radians.
double largest_principal_angle(const Matrix& a, const Matrix& b);

// max |Q^T Q - I|.
double orthonormality_error(const Matrix& q);

}  // namespace mpca

#endif  // MPCA_NUMERICS_HPP_
