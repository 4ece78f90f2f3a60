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

#include <mpca/eval.hpp>

#include <mpca/error.hpp>
#include <mpca/text.hpp>

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <set>

namespace mpca {

Split stratified_split(const LabeledDataset& ds, const SplitSpec& spec) {
  ds.validate();
  if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
    throw ArgumentError("train fraction must lie in (0, 1), got " + format_double(spec.train_fraction));
  }
  const int classes = ds.num_classes();
  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(classes));
  for (std::size_t i = 0; i < ds.labels.size(); ++i) members[static_cast<std::size_t>(ds.labels[i])].push_back(i);

  std::mt19937_64 rng(spec.seed);
  std::vector<std::size_t> train_index;
  std::vector<std::size_t> test_index;
  for (int c = 0; c < classes; ++c) {
    auto& idx = members[static_cast<std::size_t>(c)];
    if (idx.empty()) continue;
    if (idx.size() < 2) {
      const std::string name =
          static_cast<std::size_t>(c) < ds.class_names.size() ? ds.class_names[c] : std::to_string(c);
      throw ProtocolError("class " + name + " has " + std::to_string(idx.size()) +
                          " sample; splitting needs at least 2 per class");
    }
    std::shuffle(idx.begin(), idx.end(), rng);
    const auto n_c = static_cast<long long>(idx.size());
    const long long take = std::clamp(std::llround(spec.train_fraction * static_cast<double>(n_c)), 1LL, n_c - 1);
    train_index.insert(train_index.end(), idx.begin(), idx.begin() + take);
    test_index.insert(test_index.end(), idx.begin() + take, idx.end());
  }
  std::sort(train_index.begin(), train_index.end());
  std::sort(test_index.begin(), test_index.end());
  LabeledDataset train = ds.subset(train_index);
  LabeledDataset test = ds.subset(test_index);
  return Split{std::move(train), std::move(test), std::move(train_index), std::move(test_index)};
}

namespace {

struct Neighbour {
  double dist2;
  std::size_t index;
};

// Keeps the k smallest (dist2, index) pairs seen so far, sorted. Candidates
// arrive in increasing index order, so a strict comparison resolves distance
// ties towards the smaller index.
class NearestK {
 public:
  explicit NearestK(int k) : k_(static_cast<std::size_t>(k)) { best_.reserve(k_ + 1); }

  void offer(double dist2, std::size_t index) {
    if (best_.size() == k_ && !(dist2 < best_.back().dist2)) return;
    auto pos = std::upper_bound(best_.begin(), best_.end(), dist2,
                                [](double d, const Neighbour& n) { return d < n.dist2; });
    best_.insert(pos, Neighbour{dist2, index});
    if (best_.size() > k_) best_.pop_back();
  }

  const std::vector<Neighbour>& neighbours() const { return best_; }
  void clear() { best_.clear(); }

 private:
  std::size_t k_;
  std::vector<Neighbour> best_;
};

int vote(const std::vector<Neighbour>& neighbours, std::span<const int> labels) {
  struct Tally {
    int label;
    int count;
    double dist_sum;
  };
  std::vector<Tally> tallies;
  for (const auto& nb : neighbours) {
    const int label = labels[nb.index];
    auto it = std::find_if(tallies.begin(), tallies.end(), [&](const Tally& t) { return t.label == label; });
    if (it == tallies.end()) {
      tallies.push_back({label, 0, 0.0});
      it = tallies.end() - 1;
    }
    ++it->count;
    it->dist_sum += std::sqrt(nb.dist2);
  }
  const Tally* best = &tallies.front();
  for (const auto& t : tallies) {
    if (t.count != best->count) {
      if (t.count > best->count) best = &t;
      continue;
    }
    const double mean_t = t.dist_sum / t.count;
    const double mean_best = best->dist_sum / best->count;
    if (mean_t < mean_best || (mean_t == mean_best && t.label < best->label)) best = &t;
  }
  return best->label;
}

void check_knn_inputs(const Matrix& train_points, std::span<const int> train_labels, int k) {
  const auto t = train_points.cols();
  if (static_cast<Eigen::Index>(train_labels.size()) != t) {
    throw ArgumentError("knn: " + std::to_string(t) + " training points but " +
                        std::to_string(train_labels.size()) + " labels");
  }
  if (k < 1 || k > t) {
    throw ArgumentError("knn: k = " + std::to_string(k) + " outside [1, " + std::to_string(t) + "]");
  }
}

}  // namespace

int knn_classify(const Matrix& train_points, std::span<const int> train_labels, const Vector& query, int k) {
  check_knn_inputs(train_points, train_labels, k);
  if (query.size() != train_points.rows()) {
    throw ArgumentError("knn: query has " + std::to_string(query.size()) + " coordinates, training points have " +
                        std::to_string(train_points.rows()));
  }
  NearestK nearest(k);
  for (Eigen::Index i = 0; i < train_points.cols(); ++i) {
    nearest.offer((train_points.col(i) - query).squaredNorm(), static_cast<std::size_t>(i));
  }
  return vote(nearest.neighbours(), train_labels);
}

std::vector<double> knn_prefix_accuracy(const Matrix& train_points, std::span<const int> train_labels,
                                        const Matrix& test_points, std::span<const int> test_labels,
                                        std::span<const Eigen::Index> dims, int k) {
  check_knn_inputs(train_points, train_labels, k);
  if (test_points.rows() != train_points.rows() ||
      static_cast<Eigen::Index>(test_labels.size()) != test_points.cols() || test_points.cols() == 0) {
    throw ArgumentError("knn: test points do not match the training coordinates or labels");
  }
  Eigen::Index max_dim = 0;
  for (auto d : dims) {
    if (d < 1 || d > train_points.rows()) {
      throw ArgumentError("knn: prefix length " + std::to_string(d) + " outside [1, " +
                          std::to_string(train_points.rows()) + "]");
    }
    max_dim = std::max(max_dim, d);
  }

  const Eigen::Index t = train_points.cols();
  const Eigen::Index p = test_points.cols();
  constexpr Eigen::Index kBlock = 128;
  std::vector<std::size_t> correct(dims.size(), 0);
  Eigen::ArrayXXd dist2(kBlock, t);
  NearestK nearest(k);
  for (Eigen::Index b0 = 0; b0 < p; b0 += kBlock) {
    const Eigen::Index rows = std::min(kBlock, p - b0);
    dist2.setZero();
    for (Eigen::Index c = 0; c < max_dim; ++c) {
      for (Eigen::Index q = 0; q < rows; ++q) {
        dist2.row(q) += (train_points.row(c).array() - test_points(c, b0 + q)).square();
      }
      for (std::size_t di = 0; di < dims.size(); ++di) {
        if (dims[di] != c + 1) continue;
        for (Eigen::Index q = 0; q < rows; ++q) {
          nearest.clear();
          for (Eigen::Index i = 0; i < t; ++i) nearest.offer(dist2(q, i), static_cast<std::size_t>(i));
          if (vote(nearest.neighbours(), train_labels) == test_labels[static_cast<std::size_t>(b0 + q)]) {
            ++correct[di];
          }
        }
      }
    }
  }
  std::vector<double> out(dims.size());
  for (std::size_t di = 0; di < dims.size(); ++di) out[di] = 100.0 * static_cast<double>(correct[di]) / p;
  return out;
}

MethodSpec MethodSpec::FromName(std::string_view name, FitConfig base) {
  if (name == "mpca-1") {
    base.metric = MetricKind::kCosine;
  } else if (name == "mpca-2") {
    base.metric = MetricKind::kTotalDistance;
  } else if (name != "pca") {
    throw ArgumentError("unknown method '" + std::string(name) + "' (expected pca, mpca-1 or mpca-2)");
  }
  return MethodSpec{std::string(name), std::move(base)};
}

MpcaModel MethodSpec::fit(const DataMatrix& x, Eigen::Index dim) const {
  if (name == "pca") return pca_fit(x, dim);
  FitConfig cfg = config;
  cfg.target_dim = dim;
  return mpca_fit(x, cfg);
}

double evaluate_once(const LabeledDataset& ds, const MethodSpec& method, Eigen::Index dim, const SplitSpec& split,
                     int k) {
  const Split parts = stratified_split(ds, split);
  const Eigen::Index limit = std::min(parts.train.data.rows(), parts.train.data.cols());
  if (dim < 1 || dim > limit) {
    throw ArgumentError("dimension " + std::to_string(dim) + " outside [1, min(m, n_train) = " +
                        std::to_string(limit) + "]");
  }
  const MpcaModel model = method.fit(parts.train.data, dim);
  const Matrix train = transform(model, parts.train.data);
  const Matrix test = transform(model, parts.test.data);
  std::size_t correct = 0;
  for (Eigen::Index j = 0; j < test.cols(); ++j) {
    if (knn_classify(train, parts.train.labels, test.col(j), k) == parts.test.labels[static_cast<std::size_t>(j)]) {
      ++correct;
    }
  }
  return 100.0 * static_cast<double>(correct) / static_cast<double>(test.cols());
}

std::string SweepReport::table_cell() const {
  return format_fixed(optimal_mean, 2) + " ± " + format_fixed(optimal_std, 2) + " (" +
         std::to_string(optimal_dim) + ")";
}

void summarize(SweepReport& report) {
  report.optimal_dim = 0;
  report.optimal_mean = -1.0;
  report.optimal_std = 0.0;
  for (auto& stats : report.per_dim) {
    const auto runs = static_cast<double>(stats.accuracies.size());
    double sum = 0.0;
    for (double a : stats.accuracies) sum += a;
    stats.mean = runs > 0 ? sum / runs : 0.0;
    double ss = 0.0;
    for (double a : stats.accuracies) ss += (a - stats.mean) * (a - stats.mean);
    stats.std = runs > 1 ? std::sqrt(ss / (runs - 1.0)) : 0.0;
  }
  for (const auto& stats : report.per_dim) {
    if (stats.mean > report.optimal_mean ||
        (stats.mean == report.optimal_mean && stats.dim < report.optimal_dim)) {
      report.optimal_mean = stats.mean;
      report.optimal_std = stats.std;
      report.optimal_dim = stats.dim;
    }
  }
  if (report.per_dim.empty()) report.optimal_mean = 0.0;
}

std::vector<SweepReport> dimension_sweep(const LabeledDataset& ds, const std::vector<MethodSpec>& methods,
                                         const SweepConfig& config) {
  if (methods.empty()) throw ArgumentError("sweep needs at least one method");
  if (config.runs < 1) throw ArgumentError("sweep needs at least one run");
  if (config.dims.empty()) throw ArgumentError("sweep needs at least one dimension");

  // Stratified counts depend only on class sizes, so one probe split fixes the
  // training size for every seed.
  const Split probe = stratified_split(ds, config.split);
  const Eigen::Index limit = std::min(probe.train.data.rows(), probe.train.data.cols());
  std::set<Eigen::Index> feasible;
  std::vector<std::string> skipped;
  for (auto d : config.dims) {
    if (d >= 1 && d <= limit) {
      feasible.insert(d);
    } else {
      skipped.push_back("dimension " + std::to_string(d) + " skipped: outside [1, min(m, n_train) = " +
                        std::to_string(limit) + "]");
    }
  }
  if (feasible.empty()) throw ArgumentError("no feasible dimension in the sweep grid");
  const std::vector<Eigen::Index> dims(feasible.begin(), feasible.end());
  const Eigen::Index max_dim = dims.back();

  std::vector<SweepReport> reports(methods.size());
  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    auto& rep = reports[mi];
    rep.method = methods[mi].name;
    rep.train_fraction = config.split.train_fraction;
    rep.diagnostics = skipped;
    rep.diagnostics.push_back("optimal dimension is selected on test accuracy, as in published tables; "
                              "it is an optimistic estimate");
    for (auto d : dims) rep.per_dim.push_back(DimStats{d, 0.0, 0.0, {}});
  }

  for (std::size_t run = 0; run < config.runs; ++run) {
    SplitSpec spec = config.split;
    spec.seed = config.split.seed + run;
    const Split parts = stratified_split(ds, spec);
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      auto& rep = reports[mi];
      rep.seeds.push_back(spec.seed);
      const MpcaModel model = methods[mi].fit(parts.train.data, max_dim);
      const Matrix train = transform(model, parts.train.data);
      const Matrix test = transform(model, parts.test.data);
      std::vector<Eigen::Index> usable(dims.size());
      for (std::size_t di = 0; di < dims.size(); ++di) {
        usable[di] = std::min(dims[di], model.dim());
        if (usable[di] < dims[di]) {
          rep.diagnostics.push_back("run " + std::to_string(run) + ": fitted rank " + std::to_string(model.dim()) +
                                    " below dimension " + std::to_string(dims[di]) +
                                    "; dropped directions carry no training variance");
        }
      }
      const auto acc = knn_prefix_accuracy(train, parts.train.labels, test, parts.test.labels, usable, config.k);
      for (std::size_t di = 0; di < dims.size(); ++di) rep.per_dim[di].accuracies.push_back(acc[di]);
    }
  }
  for (auto& rep : reports) summarize(rep);
  return reports;
}

std::vector<RobustnessRow> robustness_trial(const SyntheticSpec& spec, const std::vector<MethodSpec>& methods,
                                            std::span<const std::uint64_t> seeds) {
  std::vector<RobustnessRow> rows;
  for (std::uint64_t seed : seeds) {
    SyntheticSpec s = spec;
    s.seed = seed;
    const auto [ds, truth] = synthesize(s);
    for (const auto& method : methods) {
      const MpcaModel model = method.fit(ds.data, s.subspace_dim);
      RobustnessRow row{method.name, seed, largest_principal_angle(model.basis, truth.basis), 0.0, 0.0};
      double out_sum = 0.0;
      double in_sum = 0.0;
      std::size_t out_n = 0;
      for (std::size_t i = 0; i < truth.outlier_mask.size(); ++i) {
        if (truth.outlier_mask[i]) {
          out_sum += model.weights[i];
          ++out_n;
        } else {
          in_sum += model.weights[i];
        }
      }
      const std::size_t in_n = truth.outlier_mask.size() - out_n;
      row.mean_outlier_weight = out_n > 0 ? out_sum / static_cast<double>(out_n) : 0.0;
      row.mean_inlier_weight = in_n > 0 ? in_sum / static_cast<double>(in_n) : 0.0;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_runs_csv(const std::vector<SweepReport>& reports) {
  std::string out = "method,dim,run,seed,accuracy_percent\n";
  for (const auto& rep : reports) {
    for (const auto& stats : rep.per_dim) {
      for (std::size_t run = 0; run < stats.accuracies.size(); ++run) {
        out += rep.method + "," + std::to_string(stats.dim) + "," + std::to_string(run) + "," +
               std::to_string(rep.seeds[run]) + "," + format_double(stats.accuracies[run]) + "\n";
      }
    }
  }
  return out;
}

std::string format_summary_csv(const std::vector<SweepReport>& reports) {
  std::string out = "method,dim,mean,std,n_runs\n";
  for (const auto& rep : reports) {
    for (const auto& stats : rep.per_dim) {
      out += rep.method + "," + std::to_string(stats.dim) + "," + format_double(stats.mean) + "," +
             format_double(stats.std) + "," + std::to_string(stats.accuracies.size()) + "\n";
    }
  }
  return out;
}

std::string format_optimal_csv(const std::vector<SweepReport>& reports) {
  std::string out =
      "# optimal dimension chosen on test accuracy (optimistic, mirrors published tables)\n"
      "method,optimal_dim,mean,std,n_runs\n";
  for (const auto& rep : reports) {
    out += rep.method + "," + std::to_string(rep.optimal_dim) + "," + format_double(rep.optimal_mean) + "," +
           format_double(rep.optimal_std) + "," + std::to_string(rep.seeds.size()) + "\n";
  }
  return out;
}

std::string format_report_json(const std::vector<SweepReport>& reports) {
  nlohmann::ordered_json doc;
  doc["format"] = "mpca-sweep-report";
  doc["version"] = 1;
  doc["note"] = "optimal dimension chosen on test accuracy (optimistic, mirrors published tables)";
  auto& methods = doc["methods"] = nlohmann::ordered_json::array();
  for (const auto& rep : reports) {
    nlohmann::ordered_json m;
    m["method"] = rep.method;
    m["train_fraction"] = rep.train_fraction;
    m["seeds"] = rep.seeds;
    auto& per_dim = m["per_dim"] = nlohmann::ordered_json::array();
    for (const auto& stats : rep.per_dim) {
      per_dim.push_back({{"dim", stats.dim},
                         {"mean", stats.mean},
                         {"std", stats.std},
                         {"n_runs", stats.accuracies.size()},
                         {"accuracies", stats.accuracies}});
    }
    m["optimal"] = {{"dim", rep.optimal_dim}, {"mean", rep.optimal_mean}, {"std", rep.optimal_std}};
    m["diagnostics"] = rep.diagnostics;
    methods.push_back(std::move(m));
  }
  return doc.dump(2) + "\n";
}

std::string format_robustness_csv(const std::vector<RobustnessRow>& rows) {
  std::string out = "method,seed,angle_rad,mean_outlier_weight,mean_inlier_weight\n";
  for (const auto& r : rows) {
    out += r.method + "," + std::to_string(r.seed) + "," + format_double(r.angle) + "," +
           format_double(r.mean_outlier_weight) + "," + format_double(r.mean_inlier_weight) + "\n";
  }
  return out;
}

}  // namespace mpca
