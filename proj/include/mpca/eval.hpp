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

// Classification protocol: stratified repeated splits, k-nearest-neighbour
// classification in the reduced space and accuracy sweeps over the projection
// dimension.

#ifndef MPCA_EVAL_HPP_
#define MPCA_EVAL_HPP_

#include <mpca/core.hpp>
#include <mpca/dataset.hpp>
#include <mpca/datasets.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mpca {

struct SplitSpec {
  double train_fraction = 0.6;
  std::uint64_t seed = 0;
  bool stratified = true;
};

struct Split {
  LabeledDataset train;
  LabeledDataset test;
  std::vector<std::size_t> train_index;  // ascending
  std::vector<std::size_t> test_index;   // ascending
};

// Per class c with n_c samples, round(train_fraction * n_c) clamped to
// [1, n_c - 1] go to train. Throws ProtocolError naming the class when a class
// has fewer than 2 samples.
Split stratified_split(const LabeledDataset& ds, const SplitSpec& spec);

// Majority vote among the k nearest training columns (Euclidean). Neighbour
// distance ties go to the smaller training index; vote ties go to the class
// with the smaller mean neighbour distance, then to the smaller label.
int knn_classify(const Matrix& train_points, std::span<const int> train_labels, const Vector& query, int k);

// Accuracy (percent) of knn over every test column, for each prefix length in
// `dims` of the coordinate rows. Distances are accumulated coordinate by
// coordinate so all prefixes cost one pass.
std::vector<double> knn_prefix_accuracy(const Matrix& train_points, std::span<const int> train_labels,
                                        const Matrix& test_points, std::span<const int> test_labels,
                                        std::span<const Eigen::Index> dims, int k);

// A named dimensionality-reduction method: "pca", "mpca-1" or "mpca-2". The
// config carries the mpca settings; its metric is overridden by the name.
struct MethodSpec {
  std::string name;
  FitConfig config;

  static MethodSpec FromName(std::string_view name, FitConfig base = {});
  MpcaModel fit(const DataMatrix& x, Eigen::Index dim) const;
};

// Fits on the train part only, projects both parts and returns the percentage
// of test samples classified correctly.
double evaluate_once(const LabeledDataset& ds, const MethodSpec& method, Eigen::Index dim, const SplitSpec& split,
                     int k);

struct DimStats {
  Eigen::Index dim = 0;
  double mean = 0.0;  // percent
  double std = 0.0;   // sample standard deviation, percent
  std::vector<double> accuracies;
};

struct SweepReport {
  std::string method;
  double train_fraction = 0.0;
  std::vector<std::uint64_t> seeds;  // one per run
  std::vector<DimStats> per_dim;
  Eigen::Index optimal_dim = 0;
  double optimal_mean = 0.0;
  double optimal_std = 0.0;
  std::vector<std::string> diagnostics;

  // "92.85 ± 0.19 (26)"
  std::string table_cell() const;
};

struct SweepConfig {
  std::vector<Eigen::Index> dims;
  std::size_t runs = 10;
  SplitSpec split;  // run i uses seed split.seed + i
  int k = 5;
};

// Every method sees the same sequence of splits. Each (method, run) is fitted
// once at the largest feasible dimension and smaller dimensions use the
// leading columns of that basis. Infeasible dimensions are skipped with a
// diagnostic.
std::vector<SweepReport> dimension_sweep(const LabeledDataset& ds, const std::vector<MethodSpec>& methods,
                                         const SweepConfig& config);

// Recomputes mean, sample std and the optimum from stored accuracies.
void summarize(SweepReport& report);

struct RobustnessRow {
  std::string method;
  std::uint64_t seed = 0;
  double angle = 0.0;  // largest principal angle to the ground truth, radians
  double mean_outlier_weight = 0.0;
  double mean_inlier_weight = 0.0;
};

// Fits every method on synthesize(spec) for each seed (spec.seed replaced) with
// target dimension spec.subspace_dim.
std::vector<RobustnessRow> robustness_trial(const SyntheticSpec& spec, const std::vector<MethodSpec>& methods,
                                            std::span<const std::uint64_t> seeds);

// Report files. CSV: per-run rows (method,dim,run,seed,accuracy_percent),
// summary rows (method,dim,mean,std,n_runs) and one optimal row per method.
std::string format_runs_csv(const std::vector<SweepReport>& reports);
std::string format_summary_csv(const std::vector<SweepReport>& reports);
std::string format_optimal_csv(const std::vector<SweepReport>& reports);
// Same fields as one JSON document.
std::string format_report_json(const std::vector<SweepReport>& reports);
std::string format_robustness_csv(const std::vector<RobustnessRow>& rows);

}  // namespace mpca

#endif  // MPCA_EVAL_HPP_
