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

#include <mpca/core.hpp>
#include <mpca/error.hpp>

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"

namespace mpca {
namespace {

using testing::max_diff_up_to_sign;
using testing::random_matrix;

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

Matrix column(std::initializer_list<double> v) { return vec(v); }

// ---------------------------------------------------------------------------
// Score and factor formulas

TEST(ProjectionScoresTest, Examples) {
  EXPECT_EQ(projection_scores(vec({1, 0}), column({3, 4})).values[0], 9.0);
  EXPECT_EQ(projection_scores(vec({0, 1}), column({3, 0})).values[0], 0.0);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(projection_scores(vec({h, h}), column({1, 1})).values[0], 2.0, 1e-10);
}

TEST(ProjectionScoresTest, RejectsBadDirection) {
  EXPECT_THROW(projection_scores(vec({1, 0, 0}), column({3, 4})), ArgumentError);
  EXPECT_THROW(projection_scores(vec({1, 1}), column({3, 4})), ArgumentError);
}

TEST(TotalDistanceFactorTest, Examples) {
  EXPECT_EQ(total_distance_factor({{1, 2, 3}, {}}), (std::vector<double>{5, 2, 5}));
  EXPECT_EQ(total_distance_factor({{0.1, 0.1, 0.1}, {}}), (std::vector<double>{0, 0, 0}));
  EXPECT_EQ(total_distance_factor({{0, 4}, {}}), (std::vector<double>{16, 16}));
}

TEST(TotalDistanceFactorTest, MatchesDoubleSumOracle) {
  std::mt19937_64 rng(5);
  std::exponential_distribution<double> expo(0.3);
  ScoreVector s;
  for (int i = 0; i < 40; ++i) s.values.push_back(expo(rng));
  const auto d = total_distance_factor(s);
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    double oracle = 0.0;
    for (double sj : s.values) oracle += (s.values[i] - sj) * (s.values[i] - sj);
    EXPECT_NEAR(d[i], oracle, 1e-10 * std::max(1.0, oracle));
    EXPECT_GT(d[i], 0.0);
  }
}

TEST(CosineScoresTest, Examples) {
  EXPECT_EQ(cosine_scores(vec({1, 0}), column({2, 0})).values[0], 1.0);
  EXPECT_EQ(cosine_scores(vec({1, 0}), column({0, 3})).values[0], 0.0);
  EXPECT_NEAR(cosine_scores(vec({1, 0}), column({1, 1})).values[0], 0.7071067811865475, 1e-15);
}

TEST(CosineScoresTest, ZeroColumnScoresZeroWithDiagnostic) {
  Matrix x(2, 3);
  x << 1, 0, -2, 1, 0, 1;
  const auto s = cosine_scores(vec({1, 0}), x);
  EXPECT_EQ(s.values[1], 0.0);
  ASSERT_EQ(s.zero_norm_columns.size(), 1u);
  EXPECT_EQ(s.zero_norm_columns[0], 1u);
  for (double v : s.values) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(CosineFactorTest, PublishedEpsilon) {
  constexpr double kEps = 0.0001;
  const auto d = cosine_factor({{1.0, 0.0, 0.5}, {}}, kEps);
  EXPECT_NEAR(d[0], 0.9999000099990001, 1e-15);
  EXPECT_NEAR(d[1], 10000.0, 1e-10);
  EXPECT_NEAR(d[2], 1.9996000799840032, 1e-14);
  for (double v : d) {
    EXPECT_GE(v, 1.0 / (1.0 + kEps));
    EXPECT_LE(v, 1.0 / kEps);
  }
  EXPECT_THROW(cosine_factor({{0.5}, {}}, 0.0), ArgumentError);
}

TEST(MultipliersFromRawTest, Examples) {
  const std::vector<double> a{0.9999, 10000};
  const auto w = multipliers_from_raw(a, Orientation::kSuppressOutliers);
  EXPECT_EQ(w[0], 1.0);
  EXPECT_NEAR(w[1], 9.999e-5, 1e-14);

  const std::vector<double> b{5, 2, 5};
  const auto wb = multipliers_from_raw(b, Orientation::kSuppressOutliers);
  EXPECT_NEAR(wb[0], 0.4, 1e-12);
  EXPECT_EQ(wb[1], 1.0);
  EXPECT_NEAR(wb[2], 0.4, 1e-12);

  const std::vector<double> c{3.5, 3.5, 3.5};
  for (auto o : {Orientation::kSuppressOutliers, Orientation::kAsWritten}) {
    EXPECT_EQ(multipliers_from_raw(c, o).values(), (std::vector<double>{1, 1, 1}));
  }
  const std::vector<double> zeros{0, 0};
  EXPECT_EQ(multipliers_from_raw(zeros, Orientation::kSuppressOutliers).values(), (std::vector<double>{1, 1}));
}

TEST(MultipliersFromRawTest, AsWrittenKeepsRawOrdering) {
  const std::vector<double> raw{1, 4, 2};
  const auto w = multipliers_from_raw(raw, Orientation::kAsWritten);
  EXPECT_NEAR(w[0], 0.25, 1e-12);
  EXPECT_EQ(w[1], 1.0);
  EXPECT_NEAR(w[2], 0.5, 1e-12);
}

TEST(MultipliersFromRawTest, RejectsNegativeOrNonFinite) {
  const std::vector<double> neg{1, -1};
  const std::vector<double> inf{1, std::numeric_limits<double>::infinity()};
  EXPECT_THROW(multipliers_from_raw(neg, Orientation::kSuppressOutliers), ArgumentError);
  EXPECT_THROW(multipliers_from_raw(inf, Orientation::kAsWritten), ArgumentError);
}

TEST(WeightVectorTest, Invariants) {
  EXPECT_THROW(WeightVector(std::vector<double>{1.0, 0.0}), ArgumentError);
  EXPECT_THROW(WeightVector(std::vector<double>{0.5, 0.25}), ArgumentError);
  EXPECT_NO_THROW(WeightVector(std::vector<double>{0.5, 1.0}));
}

// ---------------------------------------------------------------------------
// Loss and feature basis

TEST(WeightedLossTest, FullRankIsZero) {
  const Matrix xc = random_matrix(4, 6, 3);
  const WeightVector w(std::vector<double>{1, 0.5, 0.25, 0.9, 0.3, 0.7});
  const auto s = svd(Matrix(xc * w.as_vector().asDiagonal()), 4);
  const double scale = (xc * w.as_vector().asDiagonal()).squaredNorm();
  EXPECT_LT(weighted_loss(xc, w, s.right_vectors), 1e-16 * scale * 100);
}

TEST(WeightedLossTest, RankOneDataIsZero) {
  const Matrix xc = (Matrix(2, 2) << 1, -1, 1, -1).finished();
  const WeightVector w(2);
  const auto s = svd(xc, 1);
  EXPECT_LT(weighted_loss(xc, w, s.right_vectors), 1e-28);
}

TEST(WeightedLossTest, EqualsSingularValueTail) {
  const Matrix xc = random_matrix(4, 6, 8);
  const auto s = svd(xc, 2);
  const Vector sigma = testing::gram_singular_values(xc);
  const double tail = sigma(2) * sigma(2) + sigma(3) * sigma(3);
  EXPECT_NEAR(weighted_loss(xc, WeightVector(6), s.right_vectors), tail, 1e-10 * tail);
}

TEST(WeightedLossTest, DimensionMismatch) {
  const Matrix xc = random_matrix(3, 5, 1);
  const auto s = svd(xc, 2);
  EXPECT_THROW(weighted_loss(xc, WeightVector(4), s.right_vectors), ArgumentError);
}

TEST(FeatureBasisTest, UnitWeightsGiveLeftSingularVectors) {
  const Matrix xc = random_matrix(5, 8, 12);
  const auto s = svd(xc, 4);
  const auto fb = feature_basis(xc, WeightVector(8), s);
  EXPECT_TRUE(fb.diagnostics.empty());
  EXPECT_LT(max_diff_up_to_sign(fb.basis, s.left_vectors), 1e-8);
}

TEST(FeatureBasisTest, RandomWeights) {
  const Matrix xc = random_matrix(5, 8, 13);
  Vector w = testing::random_positive(8, 14);
  w /= w.maxCoeff();
  const WeightVector weights(std::vector<double>(w.data(), w.data() + 8));
  const auto s = svd(Matrix(xc * w.asDiagonal()), 5);
  const auto fb = feature_basis(xc, weights, s);
  EXPECT_LT((fb.basis.cwiseAbs() - s.left_vectors.cwiseAbs()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(FeatureBasisTest, RankDeficientDropsColumn) {
  Matrix xc(3, 4);
  xc.row(0) << 1, -1, 2, -2;
  xc.row(1) << 2, -2, 4, -4;
  xc.row(2) << 0, 0, 0, 0;
  const auto s = svd(xc, 2);
  const auto fb = feature_basis(xc, WeightVector(4), s);
  EXPECT_EQ(fb.basis.cols(), 1);
  ASSERT_EQ(fb.diagnostics.size(), 1u);
  EXPECT_NE(fb.diagnostics[0].find("rank deficiency"), std::string::npos);
}

// ---------------------------------------------------------------------------
// Fits

TEST(PcaFitTest, DiagonalLineExample) {
  const DataMatrix x = DataMatrix::FromRows({{1, -1, 2, -2}, {1, -1, 2, -2}});
  const auto model = pca_fit(x, 1);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_LT(max_diff_up_to_sign(model.basis, column({h, h})), 1e-12);
  EXPECT_NEAR(model.singular_values(0), std::sqrt(20.0), 1e-12);
  EXPECT_EQ(model.iterations, 1u);
  EXPECT_EQ(model.method, "pca");
}

TEST(PcaFitTest, DominantAxis) {
  const DataMatrix x = DataMatrix::FromRows({{5, -5, 0, 0}, {0, 0, 1, -1}});
  const auto model = pca_fit(x, 1);
  EXPECT_LT(max_diff_up_to_sign(model.basis, column({1, 0})), 1e-12);
}

TEST(PcaFitTest, ProjectedVarianceMatchesSingularValues) {
  const DataMatrix x(random_matrix(10, 30, 21));
  const auto model = pca_fit(x, 5);
  const Matrix coords = transform(model, x);
  for (Eigen::Index j = 0; j < 5; ++j) {
    const double variance = coords.row(j).squaredNorm() / 30.0;
    const double expected = model.singular_values(j) * model.singular_values(j) / 30.0;
    EXPECT_NEAR(variance, expected, 1e-8 * expected);
  }
}

TEST(MpcaFitTest, LineDataKeepsUnitWeights) {
  Matrix x(3, 6);
  const Vector dir = vec({1, 2, -2}) / 3.0;
  const double t[] = {-2.5, -1.5, -0.5, 0.5, 1.5, 2.5};
  for (int j = 0; j < 6; ++j) x.col(j) = t[j] * dir + vec({1, 1, 1});
  FitConfig cfg;
  cfg.metric = MetricKind::kCosine;
  cfg.target_dim = 1;
  const auto model = mpca_fit(DataMatrix(x), cfg);
  for (double w : model.weights.values()) EXPECT_NEAR(w, 1.0, 1e-12);
  EXPECT_LT(max_diff_up_to_sign(model.basis, pca_fit(DataMatrix(x), 1).basis), 1e-12);
}

TEST(MpcaFitTest, UniformRuleReducesToPca) {
  const DataMatrix x(random_matrix(6, 20, 4));
  FitConfig cfg;
  cfg.target_dim = 3;
  cfg.max_iterations = 1;
  cfg.multiplier_override = [](std::span<const double> raw) { return WeightVector(raw.size()); };
  const auto model = mpca_fit(x, cfg);
  EXPECT_LT(max_diff_up_to_sign(model.basis, pca_fit(x, 3).basis), 1e-8);
}

TEST(MpcaFitTest, ArgumentErrors) {
  const DataMatrix x(random_matrix(3, 5, 2));
  FitConfig cfg;
  cfg.target_dim = 4;
  EXPECT_THROW(mpca_fit(x, cfg), ArgumentError);
  cfg.target_dim = 1;
  cfg.epsilon = 0.0;
  EXPECT_THROW(mpca_fit(x, cfg), ArgumentError);
  cfg.epsilon = 1e-4;
  cfg.metric = MetricKind::kTotalDistance;
  EXPECT_THROW(mpca_fit(DataMatrix(random_matrix(3, 1, 2)), cfg), ArgumentError);
  cfg.max_iterations = 0;
  EXPECT_THROW(mpca_fit(x, cfg), ArgumentError);
}

TEST(MpcaFitTest, ModelInvariants) {
  for (auto metric : {MetricKind::kCosine, MetricKind::kTotalDistance}) {
    for (auto update : {WeightUpdate::kReplace, WeightUpdate::kAccumulate}) {
      FitConfig cfg;
      cfg.metric = metric;
      cfg.update = update;
      cfg.target_dim = 3;
      const auto model = mpca_fit(DataMatrix(random_matrix(8, 40, 31)), cfg);
      EXPECT_LE(orthonormality_error(model.basis), 1e-8);
      EXPECT_FALSE(model.loss_history.empty());
      EXPECT_LE(model.iterations, cfg.max_iterations);
      EXPECT_EQ(model.loss_history.size(), model.iterations);
      EXPECT_EQ(*std::max_element(model.weights.values().begin(), model.weights.values().end()), 1.0);
      for (double l : model.loss_history) {
        EXPECT_TRUE(std::isfinite(l));
        EXPECT_GE(l, 0.0);
      }
    }
  }
}

TEST(TransformTest, MeanMapsToZero) {
  const DataMatrix x(random_matrix(4, 12, 6));
  const auto model = pca_fit(x, 2);
  Matrix y(4, 3);
  y.colwise() = model.mean.values;
  EXPECT_LT(transform(model, y).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(TransformTest, RankOneRoundTrip) {
  Matrix x(3, 5);
  const Vector dir = vec({2, -1, 2}) / 3.0;
  const double t[] = {0.3, -1.2, 2.0, 0.7, -0.4};
  for (int j = 0; j < 5; ++j) x.col(j) = t[j] * dir + vec({4, 5, 6});
  const auto model = pca_fit(DataMatrix(x), 1);
  const Matrix coords = transform(model, x);
  const Matrix back = (model.basis * coords).colwise() + model.mean.values;
  EXPECT_LT((back - x).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(TransformTest, BasisColumnsGiveIdentity) {
  const DataMatrix x(random_matrix(5, 15, 7));
  const auto model = pca_fit(x, 3);
  const Matrix y = model.basis.colwise() + model.mean.values;
  EXPECT_LT((transform(model, y) - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(TransformTest, RowMismatch) {
  const auto model = pca_fit(DataMatrix(random_matrix(4, 10, 1)), 2);
  EXPECT_THROW(transform(model, random_matrix(3, 2, 1)), ArgumentError);
}

TEST(MpcaModelTest, Truncated) {
  const auto model = pca_fit(DataMatrix(random_matrix(6, 10, 2)), 4);
  const auto two = model.truncated(2);
  EXPECT_EQ(two.dim(), 2);
  EXPECT_EQ(two.basis, model.basis.leftCols(2));
  EXPECT_THROW(model.truncated(5), ArgumentError);
}

TEST(ParseNamesTest, RoundTrip) {
  for (auto m : {MetricKind::kCosine, MetricKind::kTotalDistance}) EXPECT_EQ(parse_metric(to_string(m)), m);
  for (auto o : {Orientation::kSuppressOutliers, Orientation::kAsWritten}) {
    EXPECT_EQ(parse_orientation(to_string(o)), o);
  }
  EXPECT_EQ(parse_metric("mpca-2"), MetricKind::kTotalDistance);
  EXPECT_THROW(parse_metric("euclid"), ArgumentError);
}

}  // namespace
}  // namespace mpca
