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

#include "cli.hpp"

#include <mpca/core.hpp>
#include <mpca/datasets.hpp>
#include <mpca/error.hpp>
#include <mpca/eval.hpp>
#include <mpca/model_io.hpp>
#include <mpca/text.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace mpca::cli {
namespace {

namespace fs = std::filesystem;

// Exit codes.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kNumerical = 3;
constexpr int kIo = 4;

// Files are staged under a temporary name and renamed only once every output
// of the command has been produced.
class OutputSet {
 public:
  explicit OutputSet(fs::path dir) : dir_(std::move(dir)) {}
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;
  ~OutputSet() {
    std::error_code ec;
    for (const auto& [tmp, final] : staged_) fs::remove(tmp, ec);
  }

  void add(const std::string& name, const std::string& content) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    const fs::path final = dir_ / name;
    const fs::path tmp = dir_ / ("." + name + ".partial");
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << content;
    out.close();
    if (!out) throw IoError("short write to '" + tmp.string() + "'");
    staged_.emplace_back(tmp, final);
  }

  std::vector<fs::path> commit() {
    std::vector<fs::path> written;
    for (const auto& [tmp, final] : staged_) {
      std::error_code ec;
      fs::rename(tmp, final, ec);
      if (ec) throw IoError("cannot rename '" + tmp.string() + "' to '" + final.string() + "': " + ec.message());
      written.push_back(final);
    }
    staged_.clear();
    return written;
  }

 private:
  fs::path dir_;
  std::vector<std::pair<fs::path, fs::path>> staged_;
};

struct DatasetFlags {
  std::string mnist_images;
  std::string mnist_labels;
  std::string isolet;
  std::string dense;
  std::string label_col = "last";
  std::string synth_spec;
  std::size_t subset = 0;

  void attach(CLI::App& app, bool with_subset) {
    app.add_option("--mnist-images", mnist_images, "IDX image file (magic 2051)");
    app.add_option("--mnist-labels", mnist_labels, "IDX label file (magic 2049)");
    app.add_option("--isolet", isolet, "Isolet data file (617 features + class 1..26 per row)");
    app.add_option("--dense", dense, "Delimited text file, one sample per row");
    app.add_option("--label-col", label_col, "Label position in --dense rows: none, first, last or 0-based index")
        ->capture_default_str();
    app.add_option("--synth-spec", synth_spec, "Synthetic data spec (key = value lines)");
    if (with_subset) {
      app.add_option("--subset", subset, "Stratified subsample of this many samples before the protocol (0 = all)")
          ->capture_default_str();
    }
  }

  LabeledDataset load(std::uint64_t seed, std::ostream& out) const {
    const int sources = (!mnist_images.empty() || !mnist_labels.empty()) + !isolet.empty() + !dense.empty() +
                        !synth_spec.empty();
    if (sources != 1) {
      throw ArgumentError(
          "exactly one dataset is required: --mnist-images/--mnist-labels, --isolet, --dense or --synth-spec");
    }
    LabeledDataset ds = [&] {
      if (!mnist_images.empty() || !mnist_labels.empty()) {
        if (mnist_images.empty() || mnist_labels.empty()) {
          throw ArgumentError("--mnist-images and --mnist-labels must be given together");
        }
        return load_idx(mnist_images, mnist_labels);
      }
      if (!isolet.empty()) return load_isolet(isolet);
      if (!dense.empty()) return load_dense(dense, LabelColumn::parse(label_col));
      return synthesize(SyntheticSpec::parse(read_file(synth_spec))).first;
    }();
    if (subset > 0 && subset < static_cast<std::size_t>(ds.data.cols())) {
      const double fraction = static_cast<double>(subset) / static_cast<double>(ds.data.cols());
      Split s = stratified_split(ds, SplitSpec{fraction, seed, true});
      s.train.diagnostics.push_back("stratified subset of " + std::to_string(s.train.data.cols()) + " from " +
                                    std::to_string(ds.data.cols()) + " samples");
      s.train.name = ds.name;
      ds = std::move(s.train);
    }
    out << "dataset " << ds.name << ": m=" << ds.data.rows() << " n=" << ds.data.cols()
        << " classes=" << ds.num_classes() << "\n";
    for (const auto& d : ds.diagnostics) out << "  note: " << d << "\n";
    return ds;
  }
};

struct FitFlags {
  std::string metric = "cosine";
  std::string orientation = "suppress-outliers";
  std::string update = "replace";
  double epsilon = 1e-4;
  double tol = 1e-6;
  std::size_t max_iter = 50;
  bool no_recenter = false;

  void attach(CLI::App& app) {
    app.add_option("--metric", metric, "Multiplier metric: cosine or total-distance")->capture_default_str();
    app.add_option("--orientation", orientation, "suppress-outliers or as-written")->capture_default_str();
    app.add_option("--update", update, "Multiplier update across iterations: replace or accumulate")
        ->capture_default_str();
    app.add_option("--epsilon", epsilon, "Cosine-metric epsilon")->capture_default_str();
    app.add_option("--tol", tol, "Relative loss-change tolerance")->capture_default_str();
    app.add_option("--max-iter", max_iter, "Maximum reweighting iterations")->capture_default_str();
    app.add_flag("--no-recenter", no_recenter, "Do not subtract the feature mean before fitting");
  }

  FitConfig config() const {
    FitConfig cfg;
    cfg.metric = parse_metric(metric);
    cfg.orientation = parse_orientation(orientation);
    cfg.update = parse_weight_update(update);
    cfg.epsilon = epsilon;
    cfg.tolerance = tol;
    cfg.max_iterations = max_iter;
    cfg.recenter = !no_recenter;
    cfg.validate();
    return cfg;
  }
};

std::vector<MethodSpec> parse_methods(const std::string& list, const FitConfig& base) {
  std::vector<MethodSpec> out;
  for (const auto& name : split_list(list)) out.push_back(MethodSpec::FromName(name, base));
  if (out.empty()) throw ArgumentError("empty method list");
  return out;
}

long long parse_int(std::string_view text, const char* what) {
  long long v = 0;
  text = trim(text);
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ArgumentError(std::string(what) + ": '" + std::string(text) + "' is not an integer");
  }
  return v;
}

// "2,4,8" or "lo:hi" or "lo:hi:step".
std::vector<Eigen::Index> parse_dims(const std::string& spec) {
  std::vector<Eigen::Index> dims;
  if (spec.find(':') != std::string::npos) {
    const auto parts = split_list(spec, ':');
    if (parts.size() < 2 || parts.size() > 3) throw ArgumentError("--dims range must be lo:hi or lo:hi:step");
    const long long lo = parse_int(parts[0], "--dims");
    const long long hi = parse_int(parts[1], "--dims");
    const long long step = parts.size() == 3 ? parse_int(parts[2], "--dims") : 1;
    if (step < 1 || lo < 1 || hi < lo) throw ArgumentError("--dims range '" + spec + "' is empty or invalid");
    for (long long d = lo; d <= hi; d += step) dims.push_back(d);
  } else {
    for (const auto& item : split_list(spec)) {
      const long long d = parse_int(item, "--dims");
      if (d < 1) throw ArgumentError("--dims entries must be >= 1");
      dims.push_back(d);
    }
  }
  if (dims.empty()) throw ArgumentError("--dims is empty");
  return dims;
}

std::vector<double> parse_fractions(const std::string& spec) {
  std::vector<double> out;
  for (const auto& item : split_list(spec)) {
    const auto v = parse_double(item);
    if (!v || !(*v > 0.0 && *v < 1.0)) throw ArgumentError("--train-fraction entries must lie in (0, 1)");
    out.push_back(*v);
  }
  if (out.empty()) throw ArgumentError("--train-fraction is empty");
  return out;
}

std::string percent_tag(double fraction) { return std::to_string(static_cast<int>(std::lround(fraction * 100))); }

// ---------------------------------------------------------------------------
// Commands

struct Common {
  std::string config;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string format = "csv";

  void attach(CLI::App& app) {
    app.add_option("--config", config, "Key = value file; command-line flags override its entries");
    app.add_option("--seed", seed, "Base random seed; run i uses seed + i")->capture_default_str();
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_option("--format", format, "Report format: csv or structured-text")
        ->check(CLI::IsMember({"csv", "structured-text"}))
        ->capture_default_str();
  }
};

struct FitCommand {
  Common common;
  DatasetFlags data;
  FitFlags fit;
  std::string method = "mpca";
  Eigen::Index dim = 0;

  void attach(CLI::App& app) {
    common.attach(app);
    data.attach(app, false);
    fit.attach(app);
    app.add_option("--method", method, "pca, mpca-1, mpca-2, or mpca (metric from --metric)")->capture_default_str();
    app.add_option("--dim", dim, "Target dimension r")->required();
  }

  void run(std::ostream& out) const {
    FitConfig cfg = fit.config();
    cfg.target_dim = dim;
    cfg.validate();
    const LabeledDataset ds = data.load(common.seed, out);
    MpcaModel model;
    if (method == "mpca") {
      model = mpca_fit(ds.data, cfg);
    } else {
      model = MethodSpec::FromName(method, cfg).fit(ds.data, dim);
    }
    OutputSet files(common.out_dir);
    files.add("model.json", format_model(model));
    files.commit();
    const auto [wmin, wmax] = std::minmax_element(model.weights.values().begin(), model.weights.values().end());
    out << "method=" << model.method << " r=" << model.dim() << " iterations=" << model.iterations
        << " final_loss=" << format_double(model.loss_history.back()) << " weight_min=" << format_double(*wmin)
        << " weight_max=" << format_double(*wmax) << "\n";
    for (const auto& d : model.diagnostics) out << "  note: " << d << "\n";
    out << "wrote " << (fs::path(common.out_dir) / "model.json").string() << "\n";
  }
};

struct TransformCommand {
  Common common;
  DatasetFlags data;
  std::string model_path;

  void attach(CLI::App& app) {
    common.attach(app);
    data.label_col = "none";
    data.attach(app, false);
    app.add_option("--model", model_path, "Model file written by `mpca fit`")->required();
  }

  void run(std::ostream& out) const {
    const MpcaModel model = load_model(model_path);
    const LabeledDataset ds = data.load(common.seed, out);
    if (ds.data.rows() != model.feature_dim()) {
      throw ArgumentError("dimension mismatch: data has " + std::to_string(ds.data.rows()) +
                          " features, model expects " + std::to_string(model.feature_dim()));
    }
    const Matrix coords = transform(model, ds.data);
    OutputSet files(common.out_dir);
    files.add("projected.csv", format_matrix(coords));
    files.commit();
    out << "projected " << coords.cols() << " samples onto " << coords.rows() << " dimensions\n";
  }
};

struct SweepCommand {
  Common common;
  DatasetFlags data;
  FitFlags fit;
  std::string methods = "pca,mpca-1,mpca-2";
  std::string dims = "2:60:2";
  std::size_t runs = 10;
  std::string fractions = "0.6,0.8";
  int k = 5;

  void attach(CLI::App& app) {
    common.attach(app);
    data.attach(app, true);
    fit.attach(app);
    app.add_option("--method", methods, "Comma-separated subset of pca, mpca-1, mpca-2")->capture_default_str();
    app.add_option("--dims", dims, "Dimension grid: list a,b,c or range lo:hi[:step]")->capture_default_str();
    app.add_option("--runs", runs, "Random splits per training fraction")->capture_default_str();
    app.add_option("--train-fraction", fractions, "Comma-separated training fractions")->capture_default_str();
    app.add_option("--k", k, "Neighbours in the KNN classifier")->capture_default_str();
  }

  void run(std::ostream& out) const {
    const FitConfig base = fit.config();
    const auto method_list = parse_methods(methods, base);
    const auto grid = parse_dims(dims);
    const auto fraction_list = parse_fractions(fractions);
    if (runs < 1) throw ArgumentError("--runs must be >= 1");
    const LabeledDataset ds = data.load(common.seed, out);

    OutputSet files(common.out_dir);
    for (double fraction : fraction_list) {
      SweepConfig cfg;
      cfg.dims = grid;
      cfg.runs = runs;
      cfg.split = SplitSpec{fraction, common.seed, true};
      cfg.k = k;
      const auto reports = dimension_sweep(ds, method_list, cfg);
      const std::string tag = "sweep_" + percent_tag(fraction);
      if (common.format == "csv") {
        files.add(tag + "_runs.csv", format_runs_csv(reports));
        files.add(tag + "_summary.csv", format_summary_csv(reports));
        files.add(tag + "_optimal.csv", format_optimal_csv(reports));
      } else {
        files.add(tag + ".json", format_report_json(reports));
      }
      out << "train fraction " << percent_tag(fraction) << "%:\n";
      for (const auto& rep : reports) {
        out << "  " << std::left << std::setw(7) << rep.method << " " << rep.table_cell() << "\n";
      }
      for (const auto& d : reports.front().diagnostics) out << "  note: " << d << "\n";
    }
    for (const auto& p : files.commit()) out << "wrote " << p.string() << "\n";
  }
};

struct BenchCommand {
  Common common;
  DatasetFlags data;
  FitFlags fit;
  std::string methods = "pca,mpca-1,mpca-2";
  Eigen::Index dim = 30;
  double fraction = 0.6;
  std::size_t reps = 3;
  int k = 5;

  void attach(CLI::App& app) {
    common.attach(app);
    data.attach(app, true);
    fit.attach(app);
    app.add_option("--method", methods, "Comma-separated subset of pca, mpca-1, mpca-2")->capture_default_str();
    app.add_option("--dim", dim, "Projection dimension")->capture_default_str();
    app.add_option("--train-fraction", fraction, "Training fraction")->capture_default_str();
    app.add_option("--reps", reps, "Timed repetitions (median reported, at least 3)")->capture_default_str();
    app.add_option("--k", k, "Neighbours in the KNN classifier")->capture_default_str();
  }

  void run(std::ostream& out) const {
    const FitConfig base = fit.config();
    const auto method_list = parse_methods(methods, base);
    if (reps < 3) throw ArgumentError("--reps must be >= 3");
    const LabeledDataset ds = data.load(common.seed, out);
    const Split parts = stratified_split(ds, SplitSpec{fraction, common.seed, true});
    const auto m = static_cast<double>(parts.train.data.rows());
    const auto n = static_cast<double>(parts.train.data.cols());

    using Clock = std::chrono::steady_clock;
    auto median = [](std::vector<double> v) {
      std::sort(v.begin(), v.end());
      return v[v.size() / 2];
    };
    std::string csv = "method,phase,median_seconds,reps,iterations,m,n,thin_svd_work,eigen_model_work\n";
    out << std::left << std::setw(8) << "method" << std::setw(10) << "phase" << std::setw(14) << "median_s"
        << "iterations\n";
    for (const auto& method : method_list) {
      std::vector<double> train_s;
      std::vector<double> test_s;
      std::size_t iterations = 0;
      for (std::size_t rep = 0; rep < reps; ++rep) {
        const auto t0 = Clock::now();
        const MpcaModel model = method.fit(parts.train.data, dim);
        const auto t1 = Clock::now();
        const Matrix train = transform(model, parts.train.data);
        const Matrix test = transform(model, parts.test.data);
        const Eigen::Index d[] = {model.dim()};
        knn_prefix_accuracy(train, parts.train.labels, test, parts.test.labels, d, k);
        const auto t2 = Clock::now();
        train_s.push_back(std::chrono::duration<double>(t1 - t0).count());
        test_s.push_back(std::chrono::duration<double>(t2 - t1).count());
        iterations = model.iterations;
      }
      const double t = static_cast<double>(iterations);
      const double thin = t * std::min(m, n) * m * n;
      const double eigen_model = t * (m * m * m + m * n);
      for (const auto& [phase, samples] : {std::pair{"training", &train_s}, std::pair{"testing", &test_s}}) {
        const double med = median(*samples);
        csv += method.name + "," + phase + "," + format_double(med) + "," + std::to_string(reps) + "," +
               std::to_string(iterations) + "," + format_double(m) + "," + format_double(n) + "," +
               format_double(thin) + "," + format_double(eigen_model) + "\n";
        std::ostringstream cell;
        cell << std::scientific << std::setprecision(2) << med;
        out << std::setw(8) << method.name << std::setw(10) << phase << std::setw(14) << cell.str() << iterations
            << "\n";
      }
    }
    OutputSet files(common.out_dir);
    files.add("bench.csv", csv);
    for (const auto& p : files.commit()) out << "wrote " << p.string() << "\n";
  }
};

struct SynthCommand {
  Common common;
  std::string spec_path;
  bool seed_given = false;

  void attach(CLI::App& app) {
    common.attach(app);
    app.add_option("--synth-spec", spec_path, "Synthetic data spec (key = value lines)")->required();
  }

  void run(std::ostream& out, const CLI::App& app) const {
    SyntheticSpec spec = SyntheticSpec::parse(read_file(spec_path));
    if (app.count("--seed") > 0) spec.seed = common.seed;
    const auto [ds, truth] = synthesize(spec);
    std::vector<std::string> header{"mpca synthetic data", "columns: features..., label"};
    for (const auto& line : split_list(spec.to_text(), '\n')) header.push_back("spec " + line);

    std::string mask = "# outlier mask, one line per sample (1 = outlier)\n";
    for (bool b : truth.outlier_mask) mask += b ? "1\n" : "0\n";
    OutputSet files(common.out_dir);
    files.add("synth_data.csv", format_dense(ds, header));
    files.add("synth_mask.csv", mask);
    files.add("synth_basis.csv", format_matrix(truth.basis, {"ground-truth basis, " + std::to_string(spec.feature_dim) +
                                                             " rows x " + std::to_string(spec.subspace_dim) +
                                                             " columns", "seed " + std::to_string(spec.seed)}));
    for (const auto& p : files.commit()) out << "wrote " << p.string() << "\n";
  }
};

struct RobustnessCommand {
  Common common;
  FitFlags fit;
  std::string spec_path;
  std::string methods = "pca,mpca-1,mpca-2";
  std::size_t seeds = 10;

  void attach(CLI::App& app) {
    common.attach(app);
    fit.attach(app);
    app.add_option("--synth-spec", spec_path, "Synthetic data spec (key = value lines)")->required();
    app.add_option("--method", methods, "Comma-separated subset of pca, mpca-1, mpca-2")->capture_default_str();
    app.add_option("--seeds", seeds, "Number of generator seeds (seed, seed + 1, ...)")->capture_default_str();
  }

  void run(std::ostream& out) const {
    const auto method_list = parse_methods(methods, fit.config());
    const SyntheticSpec spec = SyntheticSpec::parse(read_file(spec_path));
    std::vector<std::uint64_t> seed_list;
    for (std::size_t i = 0; i < seeds; ++i) seed_list.push_back(common.seed + i);
    const auto rows = robustness_trial(spec, method_list, seed_list);
    for (const auto& method : method_list) {
      double angle = 0.0;
      std::size_t separated = 0;
      for (const auto& r : rows) {
        if (r.method != method.name) continue;
        angle += r.angle;
        separated += r.mean_outlier_weight < r.mean_inlier_weight ? 1 : 0;
      }
      out << std::left << std::setw(7) << method.name << " mean angle " << format_fixed(angle / seeds, 4)
          << " rad, outliers down-weighted in " << separated << "/" << seeds << " seeds\n";
    }
    OutputSet files(common.out_dir);
    files.add("robustness.csv", format_robustness_csv(rows));
    for (const auto& p : files.commit()) out << "wrote " << p.string() << "\n";
  }
};

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

// Splices `--key=value` pairs from the --config file right after the
// subcommand name so that later command-line flags take precedence.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path || args.empty()) return args;
  std::vector<std::string> injected;
  for (const auto& [raw_key, value] : parse_key_values(read_file(*path))) {
    std::string key = raw_key;
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "config") continue;
    injected.push_back("--" + key + "=" + value);
  }
  args.insert(args.begin() + 1, injected.begin(), injected.end());
  return args;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplicative-factoring PCA: fitting, projection and KNN evaluation protocol", "mpca"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  FitCommand fit;
  TransformCommand transform_cmd;
  SweepCommand sweep;
  BenchCommand bench;
  SynthCommand synth;
  RobustnessCommand robustness;
  auto* fit_app = app.add_subcommand("fit", "Fit a model and write model.json");
  auto* transform_app = app.add_subcommand("transform", "Project data with a fitted model into projected.csv");
  auto* sweep_app = app.add_subcommand("sweep", "KNN accuracy versus projection dimension over repeated splits");
  auto* bench_app = app.add_subcommand("bench", "Median training and testing wall-clock time per method");
  auto* synth_app = app.add_subcommand("synth", "Generate a corrupted-subspace dataset with ground truth");
  auto* robust_app =
      app.add_subcommand("robustness", "Subspace recovery and outlier weights on synthetic data over seeds");
  fit.attach(*fit_app);
  transform_cmd.attach(*transform_app);
  sweep.attach(*sweep_app);
  bench.attach(*bench_app);
  synth.attach(*synth_app);
  robustness.attach(*robust_app);

  try {
    std::vector<std::string> expanded = expand_config(args);
    std::reverse(expanded.begin(), expanded.end());
    app.parse(expanded);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help arrives here too.
    if (e.get_exit_code() == 0) {
      for (auto* sub : app.get_subcommands()) out << sub->help();
      if (app.get_subcommands().empty()) out << app.help();
      return kOk;
    }
    err << "error: usage: " << one_line(e.what()) << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: config: " << one_line(e.what()) << "\n";
    return kInvalid;
  }

  try {
    if (*fit_app) fit.run(out);
    if (*transform_app) transform_cmd.run(out);
    if (*sweep_app) sweep.run(out);
    if (*bench_app) bench.run(out);
    if (*synth_app) synth.run(out, *synth_app);
    if (*robust_app) robustness.run(out);
  } catch (const ArgumentError& e) {
    err << "error: argument: " << one_line(e.what()) << "\n";
    return kInvalid;
  } catch (const FormatError& e) {
    err << "error: format: " << one_line(e.what()) << "\n";
    return kInvalid;
  } catch (const ProtocolError& e) {
    err << "error: protocol: " << one_line(e.what()) << "\n";
    return kInvalid;
  } catch (const NumericalError& e) {
    err << "error: numerical: " << one_line(e.what()) << "\n";
    return kNumerical;
  } catch (const IoError& e) {
    err << "error: io: " << one_line(e.what()) << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << "\n";
    return kIo;
  }
  return kOk;
}

}  // namespace mpca::cli
