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

#include <mpca/error.hpp>
#include <mpca/numerics.hpp>

#include <gtest/gtest.h>

#include <limits>

#include "test_util.hpp"

namespace mpca {
namespace {

using testing::random_matrix;

TEST(DataMatrixTest, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(DataMatrix(Matrix(0, 3)), ArgumentError);
  EXPECT_THROW(DataMatrix(Matrix(3, 0)), ArgumentError);
  Matrix bad = Matrix::Ones(2, 2);
  bad(1, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(DataMatrix{bad}, ArgumentError);
  bad(1, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(DataMatrix{bad}, ArgumentError);
  EXPECT_THROW(DataMatrix::FromRows({{1.0, 2.0}, {3.0}}), ArgumentError);
}

TEST(CenterColumnsTest, SmallExample) {
  const auto [centered, mean] = center_columns(DataMatrix::FromRows({{1, 3}, {2, 2}}));
  EXPECT_EQ(centered.values(), (Matrix(2, 2) << -1, 1, 0, 0).finished());
  EXPECT_EQ(mean.values, Vector::Constant(2, 2.0));
}

TEST(CenterColumnsTest, IdenticalColumnsGiveZeros) {
  Matrix x(3, 4);
  x.colwise() = Vector::LinSpaced(3, -1.5, 7.25);
  const auto [centered, mean] = center_columns(DataMatrix(x));
  EXPECT_EQ(centered.values().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(mean.values.size(), 3);
}

TEST(CenterColumnsTest, RowSumsVanish) {
  const Matrix x = random_matrix(5, 7, 11) * 3.0 + Matrix::Constant(5, 7, 4.0);
  const auto [centered, mean] = center_columns(DataMatrix(x));
  for (Eigen::Index i = 0; i < 5; ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < 7; ++j) sum += centered(i, j);
    EXPECT_LT(std::abs(sum), 1e-9);
    double direct = 0.0;
    for (Eigen::Index j = 0; j < 7; ++j) direct += x(i, j);
    EXPECT_NEAR(mean.values(i), direct / 7.0, 1e-14);
  }
}

TEST(CenterColumnsTest, Idempotent) {
  const auto once = center_columns(DataMatrix(random_matrix(6, 9, 3))).first;
  const auto twice = center_columns(once).first;
  EXPECT_LT((once.values() - twice.values()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SvdTest, DiagonalInput) {
  const auto s = svd(DataMatrix::FromRows({{2, 0}, {0, 1}}), 2);
  EXPECT_NEAR(s.singular_values(0), 2.0, 1e-14);
  EXPECT_NEAR(s.singular_values(1), 1.0, 1e-14);
  EXPECT_LT((s.left_vectors.cwiseAbs() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((s.right_vectors.cwiseAbs() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(SvdTest, OrthogonalInput) {
  const auto s = svd(DataMatrix::FromRows({{0, 1}, {1, 0}}), 2);
  EXPECT_NEAR(s.singular_values(0), 1.0, 1e-14);
  EXPECT_NEAR(s.singular_values(1), 1.0, 1e-14);
}

TEST(SvdTest, ReconstructsRandom6x4) {
  const Matrix a = random_matrix(6, 4, 5);
  const auto s = svd(DataMatrix(a), 4);
  const Matrix back = s.left_vectors * s.singular_values.asDiagonal() * s.right_vectors.transpose();
  EXPECT_LT((a - back).norm(), 1e-8);
}

TEST(SvdTest, RankOutOfRange) {
  const DataMatrix a(random_matrix(3, 5, 1));
  EXPECT_THROW(svd(a, 0), ArgumentError);
  EXPECT_THROW(svd(a, 4), ArgumentError);
}

TEST(SvdTest, SignConventionLargestEntryPositive) {
  const auto s = svd(DataMatrix(random_matrix(7, 5, 9)), 5);
  for (Eigen::Index j = 0; j < 5; ++j) {
    Eigen::Index arg = 0;
    s.left_vectors.col(j).cwiseAbs().maxCoeff(&arg);
    EXPECT_GT(s.left_vectors(arg, j), 0.0);
  }
}

// Orthonormality, ordering and reconstruction bounds on 120 random shapes.
TEST(SvdTest, ContractOnRandomMatrices) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 50);
  for (int trial = 0; trial < 120; ++trial) {
    const int m = dim(rng);
    const int n = dim(rng);
    const Matrix a = random_matrix(m, n, 1000 + trial) * std::pow(10.0, trial % 5 - 2);
    const Eigen::Index r = std::min(m, n);
    const auto s = svd(DataMatrix(a), r);
    ASSERT_LE(orthonormality_error(s.left_vectors), 1e-10) << m << "x" << n;
    ASSERT_LE(orthonormality_error(s.right_vectors), 1e-10) << m << "x" << n;
    for (Eigen::Index i = 0; i < r; ++i) {
      ASSERT_GE(s.singular_values(i), 0.0);
      if (i > 0) ASSERT_LE(s.singular_values(i), s.singular_values(i - 1));
    }
    const Matrix back = s.left_vectors * s.singular_values.asDiagonal() * s.right_vectors.transpose();
    ASSERT_LE((a - back).norm(), 1e-8 * std::max(1.0, a.norm())) << m << "x" << n;
    const Vector oracle = testing::gram_singular_values(a);
    ASSERT_LE((s.singular_values - oracle.head(r)).cwiseAbs().maxCoeff(), 1e-8 * std::max(1.0, oracle(0)));
  }
}

TEST(SvdTest, TransposeHasSameSingularValues) {
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(3 + trial, 20 - trial / 2, 77 + trial);
    const Eigen::Index r = std::min(a.rows(), a.cols());
    const auto s = svd(DataMatrix(a), r);
    const auto st = svd(DataMatrix(a).transposed(), r);
    EXPECT_LT((s.singular_values - st.singular_values).cwiseAbs().maxCoeff(), 1e-10);
  }
}

// Truncated SVD beats 50 random rank-r approximations A V_P V_P^T, the best
// approximations within random r-dimensional row spaces.
TEST(SvdTest, EckartYoungAgainstRandomProjections) {
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_matrix(12, 15, 300 + trial);
    const Eigen::Index r = 1 + trial % 6;
    const auto s = svd(DataMatrix(a), r);
    const double best =
        (a - s.left_vectors * s.singular_values.asDiagonal() * s.right_vectors.transpose()).norm();
    for (int p = 0; p < 50; ++p) {
      Eigen::HouseholderQR<Matrix> qr(random_matrix(15, r, 9000 + 50 * trial + p));
      const Matrix q = qr.householderQ() * Matrix::Identity(15, r);
      EXPECT_LE(best, (a - a * q * q.transpose()).norm() + 1e-12);
      Eigen::HouseholderQR<Matrix> qr_left(random_matrix(12, r, 19000 + 50 * trial + p));
      const Matrix ql = qr_left.householderQ() * Matrix::Identity(12, r);
      EXPECT_LE(best, (a - ql * ql.transpose() * a).norm() + 1e-12);
    }
  }
}

TEST(FrobeniusNormTest, Examples) {
  EXPECT_EQ(frobenius_norm(DataMatrix::FromRows({{3, 4}})), 5.0);
  EXPECT_EQ(frobenius_norm(DataMatrix(Matrix::Zero(3, 2))), 0.0);
  const Matrix a = random_matrix(4, 4, 17);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) sum += a(i, j) * a(i, j);
  }
  EXPECT_NEAR(frobenius_norm(DataMatrix(a)), std::sqrt(sum), 1e-12 * std::sqrt(sum));
}

TEST(PrincipalAngleTest, IdenticalAndOrthogonalSpans) {
  const Matrix e1 = Matrix::Identity(3, 1);
  Matrix e2 = Matrix::Zero(3, 1);
  e2(1, 0) = 1.0;
  EXPECT_EQ(largest_principal_angle(e1, -e1), 0.0);
  EXPECT_NEAR(largest_principal_angle(e1, e2), std::acos(0.0), 1e-15);
  Matrix tilted(3, 1);
  tilted << std::cos(1e-9), std::sin(1e-9), 0.0;
  EXPECT_NEAR(largest_principal_angle(e1, tilted), 1e-9, 1e-20);
}

}  // namespace
}  // namespace mpca
