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

// Multiplicative-factoring PCA.
//
// The fit rescales every (centered) sample column x_i by a positive multiplier
// w_i and extracts the principal subspace of X * diag(w). Multipliers are
// recomputed each iteration from the relation between every sample and the
// current first principal direction u1:
//
//   total-distance:  s_i = (u1^T x_i)^2,       raw_i = sum_j (s_i - s_j)^2
//   cosine:          c_i = |u1^T x_i| / |x_i|,  raw_i = 1 / (c_i + epsilon)
//
// A large raw factor marks an atypical sample. In the default orientation the
// multiplier is the (max-normalized) reciprocal of the raw factor so that such
// samples lose influence; `as-written` applies raw factors directly.
//
// Cost per iteration is one thin SVD of the m x n weighted matrix plus O(n^2)
// for the total-distance factors, i.e. O(t (min(m,n) m n + n^2)) for t
// iterations. The eigen-solve route, O(m^3) per outer step, is never formed.

#ifndef MPCA_CORE_HPP_
#define MPCA_CORE_HPP_

#include <mpca/numerics.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mpca {

enum class MetricKind { kCosine, kTotalDistance };
enum class Orientation { kSuppressOutliers, kAsWritten };

// How a freshly computed multiplier vector combines with the previous one.
// kReplace uses it as-is; kAccumulate multiplies it into the running weights so
// that a sample suppressed once stays suppressed.
enum class WeightUpdate { kReplace, kAccumulate };

std::string_view to_string(MetricKind metric);
std::string_view to_string(Orientation orientation);
std::string_view to_string(WeightUpdate update);
// Throw ArgumentError on unknown names. Metric also accepts "mpca-1"/"mpca-2".
MetricKind parse_metric(std::string_view name);
Orientation parse_orientation(std::string_view name);
WeightUpdate parse_weight_update(std::string_view name);

// Per-sample scores: squared projections or absolute cosines.
struct ScoreVector {
  std::vector<double> values;
  // Column indices whose score was defined by convention (zero-norm columns).
  std::vector<std::size_t> zero_norm_columns;
};

// Strictly positive, finite multipliers with max exactly 1.
class WeightVector {
 public:
  // All ones.
  explicit WeightVector(std::size_t n);
  // Validates positivity, finiteness and max == 1.
  explicit WeightVector(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  Eigen::Map<const Vector> as_vector() const {
    return {values_.data(), static_cast<Eigen::Index>(values_.size())};
  }

 private:
  std::vector<double> values_;
};

// Replaces multipliers_from_raw inside the fit loop. Receives the raw factors.
using MultiplierRule = std::function<WeightVector(std::span<const double>)>;

struct FitConfig {
  Eigen::Index target_dim = 1;
  MetricKind metric = MetricKind::kCosine;
  double epsilon = 1e-4;
  Orientation orientation = Orientation::kSuppressOutliers;
  WeightUpdate update = WeightUpdate::kReplace;
  double tolerance = 1e-6;
  std::size_t max_iterations = 50;
  bool recenter = true;
  // Not serialized. pca_fit pins this to a rule returning all ones.
  MultiplierRule multiplier_override;

  // Throws ArgumentError on r < 1, epsilon <= 0, tolerance <= 0 or
  // max_iterations < 1.
  void validate() const;
};

struct MpcaModel {
  std::string method;  // "pca", "mpca-1" (cosine) or "mpca-2" (total-distance)
  MeanVector mean;
  Matrix basis;            // m x r, orthonormal columns
  Vector singular_values;  // r
  WeightVector weights{std::size_t{0}};
  std::vector<double> loss_history;
  std::size_t iterations = 0;
  FitConfig config;
  std::vector<std::string> diagnostics;

  Eigen::Index feature_dim() const { return basis.rows(); }
  Eigen::Index dim() const { return basis.cols(); }

  // Copy keeping only the leading `r` basis columns.
  MpcaModel truncated(Eigen::Index r) const;
};

// s_i = (u1^T x_i)^2. Throws ArgumentError unless |u1| = 1 within 1e-10 and
// u1 has x.rows() entries.
ScoreVector projection_scores(const Vector& u1, const DataMatrix& x);
ScoreVector projection_scores(const Vector& u1, const Matrix& x);

// d_i = sum_j (s_i - s_j)^2, summed pairwise in O(n^2).
std::vector<double> total_distance_factor(const ScoreVector& s);

// |u1^T x_i| / (|u1| |x_i|). Zero-norm columns score 0 and are listed in
// zero_norm_columns.
ScoreVector cosine_scores(const Vector& u1, const DataMatrix& x);
ScoreVector cosine_scores(const Vector& u1, const Matrix& x);

// d_i = 1 / (|cos_i| + epsilon).
std::vector<double> cosine_factor(const ScoreVector& cos_scores, double epsilon);

// Guard added to raw factors before inversion.
inline constexpr double kRawFactorGuard = 1e-12;

// Max-normalized multipliers: 1 / (raw + guard) when suppressing outliers,
// raw + guard when as-written. Throws ArgumentError on negative or
// non-finite raw values.
WeightVector multipliers_from_raw(std::span<const double> raw, Orientation orientation);

// ||XD - (XD) V V^T||_F^2 with D = diag(weights).
double weighted_loss(const DataMatrix& xc, const WeightVector& weights, const Matrix& right_vectors);
double weighted_loss(const Matrix& xc, const WeightVector& weights, const Matrix& right_vectors);

struct FeatureBasis {
  Matrix basis;  // m x r', r' <= requested
  Vector singular_values;
  std::vector<std::string> diagnostics;
};

// Recovers feature-space directions u = X D V Sigma^{-1} from an SVD of XD.
// Columns whose singular value is at or below kRankTolerance * sigma_max are
// dropped and reported.
FeatureBasis feature_basis(const DataMatrix& xc, const WeightVector& weights, const SvdResult& svd_of_xd);
FeatureBasis feature_basis(const Matrix& xc, const WeightVector& weights, const SvdResult& svd_of_xd);

// Iteratively reweighted fit. Throws ArgumentError when target_dim exceeds
// min(m, n), when n < 2 with the total-distance metric, or on an invalid
// config.
MpcaModel mpca_fit(const DataMatrix& x, const FitConfig& config);

// Plain PCA: mpca_fit with multipliers pinned to one and a single iteration.
MpcaModel pca_fit(const DataMatrix& x, Eigen::Index r);

// basis^T (Y - mean). No multipliers are applied to unseen data.
Matrix transform(const MpcaModel& model, const DataMatrix& y);
Matrix transform(const MpcaModel& model, const Matrix& y);

}  // namespace mpca

#endif  // MPCA_CORE_HPP_
