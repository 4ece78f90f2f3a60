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

#include <algorithm>
#include <cmath>
#include <string>

namespace mpca {

std::string_view to_string(MetricKind metric) {
  switch (metric) {
    case MetricKind::kCosine:
      return "cosine";
    case MetricKind::kTotalDistance:
      return "total-distance";
  }
  return "unknown";
}

std::string_view to_string(Orientation orientation) {
  switch (orientation) {
    case Orientation::kSuppressOutliers:
      return "suppress-outliers";
    case Orientation::kAsWritten:
      return "as-written";
  }
  return "unknown";
}

std::string_view to_string(WeightUpdate update) {
  switch (update) {
    case WeightUpdate::kReplace:
      return "replace";
    case WeightUpdate::kAccumulate:
      return "accumulate";
  }
  return "unknown";
}

MetricKind parse_metric(std::string_view name) {
  if (name == "cosine" || name == "mpca-1") return MetricKind::kCosine;
  if (name == "total-distance" || name == "mpca-2") return MetricKind::kTotalDistance;
  throw ArgumentError("unknown metric '" + std::string(name) + "' (expected cosine or total-distance)");
}

Orientation parse_orientation(std::string_view name) {
  if (name == "suppress-outliers") return Orientation::kSuppressOutliers;
  if (name == "as-written") return Orientation::kAsWritten;
  throw ArgumentError("unknown orientation '" + std::string(name) +
                      "' (expected suppress-outliers or as-written)");
}

WeightUpdate parse_weight_update(std::string_view name) {
  if (name == "replace") return WeightUpdate::kReplace;
  if (name == "accumulate") return WeightUpdate::kAccumulate;
  throw ArgumentError("unknown weight update '" + std::string(name) + "' (expected replace or accumulate)");
}

WeightVector::WeightVector(std::size_t n) : values_(n, 1.0) {}

WeightVector::WeightVector(std::vector<double> values) : values_(std::move(values)) {
  double max = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v) || v <= 0.0) {
      throw ArgumentError("weight " + std::to_string(i) + " is not a positive finite value");
    }
    max = std::max(max, v);
  }
  if (!values_.empty() && max != 1.0) {
    throw ArgumentError("weights must be max-normalized to exactly 1");
  }
}

void FitConfig::validate() const {
  if (target_dim < 1) throw ArgumentError("target dimension must be >= 1");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ArgumentError("epsilon must be > 0");
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw ArgumentError("tolerance must be > 0");
  if (max_iterations < 1) throw ArgumentError("max_iterations must be >= 1");
}

MpcaModel MpcaModel::truncated(Eigen::Index r) const {
  if (r < 1 || r > dim()) {
    throw ArgumentError("cannot truncate a " + std::to_string(dim()) + "-dimensional model to " +
                        std::to_string(r));
  }
  MpcaModel out = *this;
  out.basis = basis.leftCols(r);
  out.singular_values = singular_values.head(r);
  out.config.target_dim = r;
  return out;
}

namespace {

void check_unit(const Vector& u1, Eigen::Index m) {
  if (u1.size() != m) {
    throw ArgumentError("direction has " + std::to_string(u1.size()) + " entries but data has " +
                        std::to_string(m) + " rows");
  }
  if (std::abs(u1.norm() - 1.0) > 1e-10) throw ArgumentError("direction is not unit length");
}

std::vector<double> check_raw(std::span<const double> raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i]) || raw[i] < 0.0) {
      throw ArgumentError("raw factor " + std::to_string(i) + " is negative or non-finite");
    }
  }
  return {raw.begin(), raw.end()};
}

WeightVector max_normalized(std::vector<double> w) {
  const double max = *std::max_element(w.begin(), w.end());
  for (double& v : w) v /= max;
  return WeightVector(std::move(w));
}

}  // namespace

ScoreVector projection_scores(const Vector& u1, const Matrix& x) {
  check_unit(u1, x.rows());
  const Vector proj = x.transpose() * u1;
  ScoreVector out;
  out.values.resize(static_cast<std::size_t>(proj.size()));
  for (Eigen::Index i = 0; i < proj.size(); ++i) out.values[i] = proj(i) * proj(i);
  return out;
}

ScoreVector projection_scores(const Vector& u1, const DataMatrix& x) {
  return projection_scores(u1, x.values());
}

std::vector<double> total_distance_factor(const ScoreVector& s) {
  const auto& v = s.values;
  const std::size_t n = v.size();
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double diff = v[i] - v[j];
      const double sq = diff * diff;
      d[i] += sq;
      d[j] += sq;
    }
  }
  return d;
}

ScoreVector cosine_scores(const Vector& u1, const Matrix& x) {
  check_unit(u1, x.rows());
  const Vector proj = x.transpose() * u1;
  const double u_norm = u1.norm();
  ScoreVector out;
  out.values.resize(static_cast<std::size_t>(x.cols()));
  for (Eigen::Index i = 0; i < x.cols(); ++i) {
    const double x_norm = x.col(i).norm();
    if (x_norm == 0.0) {
      out.values[i] = 0.0;
      out.zero_norm_columns.push_back(static_cast<std::size_t>(i));
      continue;
    }
    out.values[i] = std::min(1.0, std::abs(proj(i)) / (u_norm * x_norm));
  }
  return out;
}

ScoreVector cosine_scores(const Vector& u1, const DataMatrix& x) { return cosine_scores(u1, x.values()); }

std::vector<double> cosine_factor(const ScoreVector& cos_scores, double epsilon) {
  if (!(epsilon > 0.0)) throw ArgumentError("epsilon must be > 0");
  std::vector<double> d;
  d.reserve(cos_scores.values.size());
  for (double c : cos_scores.values) d.push_back(1.0 / (std::abs(c) + epsilon));
  return d;
}

WeightVector multipliers_from_raw(std::span<const double> raw, Orientation orientation) {
  if (raw.empty()) throw ArgumentError("no raw factors");
  std::vector<double> w = check_raw(raw);
  for (double& v : w) {
    v = orientation == Orientation::kSuppressOutliers ? 1.0 / (v + kRawFactorGuard) : v + kRawFactorGuard;
  }
  return max_normalized(std::move(w));
}

double weighted_loss(const Matrix& xc, const WeightVector& weights, const Matrix& right_vectors) {
  const auto n = xc.cols();
  if (static_cast<Eigen::Index>(weights.size()) != n || right_vectors.rows() != n) {
    throw ArgumentError("weighted loss: data has " + std::to_string(n) + " columns, weights " +
                        std::to_string(weights.size()) + ", right vectors " +
                        std::to_string(right_vectors.rows()) + " rows");
  }
  if (orthonormality_error(right_vectors) > 1e-8) {
    throw ArgumentError("weighted loss: right vectors are not orthonormal");
  }
  const Matrix xd = xc * weights.as_vector().asDiagonal();
  return (xd - (xd * right_vectors) * right_vectors.transpose()).squaredNorm();
}

double weighted_loss(const DataMatrix& xc, const WeightVector& weights, const Matrix& right_vectors) {
  return weighted_loss(xc.values(), weights, right_vectors);
}

FeatureBasis feature_basis(const Matrix& xc, const WeightVector& weights, const SvdResult& svd_of_xd) {
  const auto n = xc.cols();
  const auto r = svd_of_xd.singular_values.size();
  if (static_cast<Eigen::Index>(weights.size()) != n || svd_of_xd.right_vectors.rows() != n ||
      svd_of_xd.right_vectors.cols() != r) {
    throw ArgumentError("feature basis: SVD does not match the weighted data");
  }
  FeatureBasis out;
  const double sigma_max = r > 0 ? svd_of_xd.singular_values(0) : 0.0;
  const double threshold = kRankTolerance * sigma_max;
  Eigen::Index kept = 0;
  while (kept < r && svd_of_xd.singular_values(kept) > threshold) ++kept;
  if (kept < r) {
    out.diagnostics.push_back("rank deficiency: dropped " + std::to_string(r - kept) +
                              " direction(s) with singular value <= " + std::to_string(threshold) +
                              "; dimension reduced from " + std::to_string(r) + " to " + std::to_string(kept));
  }
  const Matrix xdv = (xc * weights.as_vector().asDiagonal()) * svd_of_xd.right_vectors.leftCols(kept);
  out.basis = xdv * svd_of_xd.singular_values.head(kept).cwiseInverse().asDiagonal();
  out.singular_values = svd_of_xd.singular_values.head(kept);
  return out;
}

FeatureBasis feature_basis(const DataMatrix& xc, const WeightVector& weights, const SvdResult& svd_of_xd) {
  return feature_basis(xc.values(), weights, svd_of_xd);
}

namespace {

std::vector<double> raw_factors(const Vector& u1, const Matrix& xc, const FitConfig& config) {
  if (config.metric == MetricKind::kTotalDistance) {
    return total_distance_factor(projection_scores(u1, xc));
  }
  return cosine_factor(cosine_scores(u1, xc), config.epsilon);
}

WeightVector combine(const WeightVector& previous, const WeightVector& fresh, WeightUpdate update) {
  if (update == WeightUpdate::kReplace) return fresh;
  std::vector<double> w(fresh.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = previous[i] * fresh[i];
  const double max = *std::max_element(w.begin(), w.end());
  // Repeated products underflow; keep every multiplier strictly positive.
  for (double& v : w) v = std::max(v / max, kRawFactorGuard);
  return WeightVector(std::move(w));
}

}  // namespace

MpcaModel mpca_fit(const DataMatrix& x, const FitConfig& config) {
  config.validate();
  const Eigen::Index m = x.rows();
  const Eigen::Index n = x.cols();
  const Eigen::Index r = config.target_dim;
  if (r > std::min(m, n)) {
    throw ArgumentError("target dimension " + std::to_string(r) + " exceeds min(m, n) = " +
                        std::to_string(std::min(m, n)));
  }
  if (config.metric == MetricKind::kTotalDistance && n < 2) {
    throw ArgumentError("total-distance metric needs at least 2 samples");
  }

  MpcaModel model;
  model.method = config.metric == MetricKind::kCosine ? "mpca-1" : "mpca-2";
  model.config = config;
  Matrix xc;
  if (config.recenter) {
    auto [centered, mean] = center_columns(x);
    xc = centered.values();
    model.mean = std::move(mean);
  } else {
    xc = x.values();
    model.mean.values = Vector::Zero(m);
  }

  std::size_t zero_norm = 0;
  for (Eigen::Index i = 0; i < n; ++i) zero_norm += xc.col(i).squaredNorm() == 0.0 ? 1 : 0;
  if (zero_norm > 0) {
    model.diagnostics.push_back(std::to_string(zero_norm) +
                                " zero-norm centered column(s); cosine score defined as 0");
  }

  WeightVector weights(static_cast<std::size_t>(n));
  SvdResult current;
  std::vector<double> svd_weights;
  for (std::size_t t = 1; t <= config.max_iterations; ++t) {
    current = svd(Matrix(xc * weights.as_vector().asDiagonal()), r);
    svd_weights = weights.values();
    const double loss = weighted_loss(xc, weights, current.right_vectors);
    model.loss_history.push_back(loss);
    model.iterations = t;

    Vector u1 = current.left_vectors.col(0);
    if (current.singular_values(0) > 0.0) {
      const Vector recovered = feature_basis(xc, weights, SvdResult{current.left_vectors.leftCols(1),
                                                                    current.singular_values.head(1),
                                                                    current.right_vectors.leftCols(1)})
                                   .basis.col(0);
      u1 = recovered / recovered.norm();
    }
    const std::vector<double> raw = raw_factors(u1, xc, config);
    const WeightVector fresh =
        config.multiplier_override ? config.multiplier_override(raw) : multipliers_from_raw(raw, config.orientation);
    if (fresh.size() != weights.size()) throw ArgumentError("multiplier rule returned the wrong length");
    weights = combine(weights, fresh, config.update);

    if (t >= 2) {
      const double previous = model.loss_history[t - 2];
      if (std::abs(loss - previous) <= config.tolerance * std::max(1.0, previous)) break;
    }
  }

  if (weights.values() != svd_weights) {
    current = svd(Matrix(xc * weights.as_vector().asDiagonal()), r);
  }
  FeatureBasis fb = feature_basis(xc, weights, current);
  if (fb.basis.cols() == 0) {
    throw ArgumentError("weighted data has rank 0; no principal direction exists");
  }
  model.diagnostics.insert(model.diagnostics.end(), fb.diagnostics.begin(), fb.diagnostics.end());
  model.basis = std::move(fb.basis);
  model.singular_values = std::move(fb.singular_values);
  model.weights = std::move(weights);
  model.config.target_dim = model.basis.cols();
  return model;
}

MpcaModel pca_fit(const DataMatrix& x, Eigen::Index r) {
  FitConfig config;
  config.target_dim = r;
  config.max_iterations = 1;
  config.multiplier_override = [](std::span<const double> raw) { return WeightVector(raw.size()); };
  MpcaModel model = mpca_fit(x, config);
  model.config.multiplier_override = nullptr;
  model.method = "pca";
  return model;
}

Matrix transform(const MpcaModel& model, const Matrix& y) {
  if (y.rows() != model.mean.values.size()) {
    throw ArgumentError("data has " + std::to_string(y.rows()) + " features but the model expects " +
                        std::to_string(model.mean.values.size()));
  }
  return model.basis.transpose() * (y.colwise() - model.mean.values);
}

Matrix transform(const MpcaModel& model, const DataMatrix& y) { return transform(model, y.values()); }

}  // namespace mpca
