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

#include <mpca/numerics.hpp>

#include <mpca/error.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace mpca {

DataMatrix::DataMatrix(Matrix values) : values_(std::move(values)) {
  if (values_.rows() < 1 || values_.cols() < 1) {
    throw ArgumentError("data matrix must have at least one row and one column, got " +
                        std::to_string(values_.rows()) + "x" + std::to_string(values_.cols()));
  }
  if (!values_.allFinite()) {
    throw ArgumentError("data matrix contains a non-finite entry");
  }
}

DataMatrix DataMatrix::FromRows(std::initializer_list<std::initializer_list<double>> rows) {
  const auto m = static_cast<Eigen::Index>(rows.size());
  const auto n = m == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.begin()->size());
  Matrix values(m, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw ArgumentError("ragged row " + std::to_string(i) + " in matrix literal");
    }
    Eigen::Index j = 0;
    for (double v : row) values(i, j++) = v;
    ++i;
  }
  return DataMatrix(std::move(values));
}

std::pair<DataMatrix, MeanVector> center_columns(const DataMatrix& x) {
  MeanVector mean{x.values().rowwise().mean()};
  Matrix centered = x.values().colwise() - mean.values;
  return {DataMatrix(std::move(centered)), std::move(mean)};
}

void orient_columns(Matrix& left, Matrix* right) {
  for (Eigen::Index j = 0; j < left.cols(); ++j) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < left.rows(); ++i) {
      const double a = std::abs(left(i, j));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (left(arg, j) < 0.0) {
      left.col(j) *= -1.0;
      if (right != nullptr && right->cols() > j) right->col(j) *= -1.0;
    }
  }
}

namespace {

bool usable(const SvdResult& r) {
  return r.left_vectors.allFinite() && r.right_vectors.allFinite() && r.singular_values.allFinite();
}

template <typename Solver>
SvdResult take_leading(const Solver& solver, Eigen::Index rank) {
  SvdResult out;
  out.left_vectors = solver.matrixU().leftCols(rank);
  out.singular_values = solver.singularValues().head(rank);
  out.right_vectors = solver.matrixV().leftCols(rank);
  return out;
}

}  // namespace

SvdResult svd(const Matrix& a, Eigen::Index rank) {
  const Eigen::Index full = std::min(a.rows(), a.cols());
  if (rank < 1 || rank > full) {
    throw ArgumentError("svd rank " + std::to_string(rank) + " outside [1, min(m, n) = " +
                        std::to_string(full) + "]");
  }
  if (!a.allFinite()) throw ArgumentError("svd input contains a non-finite entry");

  SvdResult out;
  Eigen::BDCSVD<Matrix> bdc(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (bdc.info() == Eigen::Success) out = take_leading(bdc, rank);
  if (bdc.info() != Eigen::Success || !usable(out)) {
    // Divide-and-conquer occasionally fails on badly scaled input; the
    // two-sided Jacobi sweep is slower but unconditionally convergent in
    // exact arithmetic.
    Eigen::JacobiSVD<Matrix> jacobi(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (jacobi.info() == Eigen::Success) out = take_leading(jacobi, rank);
    if (jacobi.info() != Eigen::Success || !usable(out)) {
      throw NumericalError("svd failed to converge on a " + std::to_string(a.rows()) + "x" +
                               std::to_string(a.cols()) + " matrix after 2 solver attempts",
                           2);
    }
  }
  orient_columns(out.left_vectors, &out.right_vectors);
  return out;
}

SvdResult svd(const DataMatrix& a, Eigen::Index rank) { return svd(a.values(), rank); }

double frobenius_norm(const DataMatrix& a) { return a.values().norm(); }

double largest_principal_angle_sine(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw ArgumentError("principal angle between bases of different ambient dimension");
  }
  const Matrix residual = a - b * (b.transpose() * a);
  if (residual.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> s(residual);
  return std::min(1.0, s.singularValues()(0));
}

double largest_principal_angle(const Matrix& a, const Matrix& b) {
  return std::asin(largest_principal_angle_sine(a, b));
}

double orthonormality_error(const Matrix& q) {
  const Matrix gram = q.transpose() * q;
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

}  // namespace mpca
