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

// Python bindings. Matrices follow the C++ convention: one sample per column.

#include <mpca/core.hpp>
#include <mpca/datasets.hpp>
#include <mpca/error.hpp>
#include <mpca/eval.hpp>
#include <mpca/model_io.hpp>
#include <mpca/numerics.hpp>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace mpca;

namespace {

FitConfig make_config(Eigen::Index dim, const std::string& metric, const std::string& orientation,
                      const std::string& update, double epsilon, double tol, std::size_t max_iter, bool recenter) {
  FitConfig cfg;
  cfg.target_dim = dim;
  cfg.metric = parse_metric(metric);
  cfg.orientation = parse_orientation(orientation);
  cfg.update = parse_weight_update(update);
  cfg.epsilon = epsilon;
  cfg.tolerance = tol;
  cfg.max_iterations = max_iter;
  cfg.recenter = recenter;
  cfg.validate();
  return cfg;
}

LabeledDataset make_dataset(const Matrix& x, const std::vector<int>& labels) {
  LabeledDataset ds{DataMatrix(x), labels, "python", {}, {}};
  ds.validate();
  return ds;
}

py::dict dataset_dict(const LabeledDataset& ds) {
  py::dict d;
  d["data"] = ds.data.values();
  d["labels"] = ds.labels;
  d["name"] = ds.name;
  d["class_names"] = ds.class_names;
  d["diagnostics"] = ds.diagnostics;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multiplicative-factoring PCA core";

  auto base = py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<ProtocolError>(m, "ProtocolError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  (void)base;

  py::class_<MpcaModel>(m, "Model")
      .def_readonly("method", &MpcaModel::method)
      .def_property_readonly("mean", [](const MpcaModel& mo) { return mo.mean.values; })
      .def_readonly("basis", &MpcaModel::basis)
      .def_readonly("singular_values", &MpcaModel::singular_values)
      .def_property_readonly("weights", [](const MpcaModel& mo) { return mo.weights.values(); })
      .def_readonly("loss_history", &MpcaModel::loss_history)
      .def_readonly("iterations", &MpcaModel::iterations)
      .def_readonly("diagnostics", &MpcaModel::diagnostics)
      .def_property_readonly("dim", &MpcaModel::dim)
      .def_property_readonly("feature_dim", &MpcaModel::feature_dim)
      .def("truncated", &MpcaModel::truncated, py::arg("r"))
      .def("transform", [](const MpcaModel& mo, const Matrix& y) { return transform(mo, y); }, py::arg("y"),
           "basis^T (y - mean) for a matrix with one sample per column.")
      .def("to_json", &format_model)
      .def_static("from_json", &parse_model, py::arg("text"))
      .def("__repr__", [](const MpcaModel& mo) {
        return "<mpca.Model " + mo.method + " m=" + std::to_string(mo.feature_dim()) +
               " r=" + std::to_string(mo.dim()) + " iterations=" + std::to_string(mo.iterations) + ">";
      });

  m.def(
      "fit",
      [](const Matrix& x, Eigen::Index dim, const std::string& metric, const std::string& orientation,
         const std::string& update, double epsilon, double tol, std::size_t max_iter, bool recenter) {
        const FitConfig cfg = make_config(dim, metric, orientation, update, epsilon, tol, max_iter, recenter);
        py::gil_scoped_release release;
        return mpca_fit(DataMatrix(x), cfg);
      },
      py::arg("x"), py::arg("dim"), py::arg("metric") = "cosine", py::arg("orientation") = "suppress-outliers",
      py::arg("update") = "replace", py::arg("epsilon") = 1e-4, py::arg("tol") = 1e-6, py::arg("max_iter") = 50,
      py::arg("recenter") = true, "Iteratively reweighted fit of an m x n matrix (samples are columns).");
  m.def(
      "pca_fit", [](const Matrix& x, Eigen::Index dim) { return pca_fit(DataMatrix(x), dim); }, py::arg("x"),
      py::arg("dim"));

  m.def(
      "svd",
      [](const Matrix& a, Eigen::Index rank) {
        const SvdResult s = svd(a, rank);
        return py::make_tuple(s.left_vectors, s.singular_values, s.right_vectors);
      },
      py::arg("a"), py::arg("rank"), "Thin SVD truncated to `rank`; returns (U, sigma, V).");
  m.def("largest_principal_angle", &largest_principal_angle, py::arg("a"), py::arg("b"));

  m.def(
      "cosine_factor",
      [](const Vector& u1, const Matrix& x, double epsilon) { return cosine_factor(cosine_scores(u1, x), epsilon); },
      py::arg("u1"), py::arg("x"), py::arg("epsilon") = 1e-4);
  m.def(
      "total_distance_factor",
      [](const Vector& u1, const Matrix& x) { return total_distance_factor(projection_scores(u1, x)); },
      py::arg("u1"), py::arg("x"));
  m.def(
      "multipliers_from_raw",
      [](const std::vector<double>& raw, const std::string& orientation) {
        return multipliers_from_raw(raw, parse_orientation(orientation)).values();
      },
      py::arg("raw"), py::arg("orientation") = "suppress-outliers");

  m.def(
      "knn_classify",
      [](const Matrix& train, const std::vector<int>& labels, const Vector& query, int k) {
        return knn_classify(train, labels, query, k);
      },
      py::arg("train"), py::arg("labels"), py::arg("query"), py::arg("k") = 5);
  m.def(
      "stratified_split",
      [](const Matrix& x, const std::vector<int>& labels, double train_fraction, std::uint64_t seed) {
        const Split s = stratified_split(make_dataset(x, labels), SplitSpec{train_fraction, seed, true});
        return py::make_tuple(s.train_index, s.test_index);
      },
      py::arg("x"), py::arg("labels"), py::arg("train_fraction") = 0.6, py::arg("seed") = 0,
      "Returns (train_index, test_index).");
  m.def(
      "evaluate_once",
      [](const Matrix& x, const std::vector<int>& labels, const std::string& method, Eigen::Index dim,
         double train_fraction, std::uint64_t seed, int k) {
        const LabeledDataset ds = make_dataset(x, labels);
        py::gil_scoped_release release;
        return evaluate_once(ds, MethodSpec::FromName(method), dim, SplitSpec{train_fraction, seed, true}, k);
      },
      py::arg("x"), py::arg("labels"), py::arg("method"), py::arg("dim"), py::arg("train_fraction") = 0.6,
      py::arg("seed") = 0, py::arg("k") = 5, "Test accuracy in percent for one stratified split.");
  m.def(
      "dimension_sweep",
      [](const Matrix& x, const std::vector<int>& labels, const std::vector<std::string>& methods,
         const std::vector<Eigen::Index>& dims, std::size_t runs, double train_fraction, std::uint64_t seed, int k) {
        const LabeledDataset ds = make_dataset(x, labels);
        std::vector<MethodSpec> specs;
        for (const auto& name : methods) specs.push_back(MethodSpec::FromName(name));
        SweepConfig cfg{dims, runs, SplitSpec{train_fraction, seed, true}, k};
        std::vector<SweepReport> reports;
        {
          py::gil_scoped_release release;
          reports = dimension_sweep(ds, specs, cfg);
        }
        py::list out;
        for (const auto& r : reports) {
          py::dict d;
          d["method"] = r.method;
          d["dims"] = [&] {
            std::vector<Eigen::Index> v;
            for (const auto& s : r.per_dim) v.push_back(s.dim);
            return v;
          }();
          d["mean"] = [&] {
            std::vector<double> v;
            for (const auto& s : r.per_dim) v.push_back(s.mean);
            return v;
          }();
          d["std"] = [&] {
            std::vector<double> v;
            for (const auto& s : r.per_dim) v.push_back(s.std);
            return v;
          }();
          d["accuracies"] = [&] {
            std::vector<std::vector<double>> v;
            for (const auto& s : r.per_dim) v.push_back(s.accuracies);
            return v;
          }();
          d["optimal_dim"] = r.optimal_dim;
          d["optimal_mean"] = r.optimal_mean;
          d["optimal_std"] = r.optimal_std;
          d["table_cell"] = r.table_cell();
          d["diagnostics"] = r.diagnostics;
          out.append(d);
        }
        return out;
      },
      py::arg("x"), py::arg("labels"), py::arg("methods"), py::arg("dims"), py::arg("runs") = 10,
      py::arg("train_fraction") = 0.6, py::arg("seed") = 0, py::arg("k") = 5);

  m.def(
      "synthesize",
      [](Eigen::Index feature_dim, std::size_t inlier_count, std::size_t outlier_count, Eigen::Index subspace_dim,
         double noise_sigma, double outlier_magnitude, std::uint64_t seed) {
        const SyntheticSpec spec{feature_dim, inlier_count, outlier_count, subspace_dim,
                                 noise_sigma, outlier_magnitude, seed};
        const auto [ds, truth] = synthesize(spec);
        py::dict d = dataset_dict(ds);
        d["basis"] = truth.basis;
        d["outlier_mask"] = truth.outlier_mask;
        return d;
      },
      py::arg("feature_dim") = 10, py::arg("inlier_count") = 100, py::arg("outlier_count") = 10,
      py::arg("subspace_dim") = 1, py::arg("noise_sigma") = 0.05, py::arg("outlier_magnitude") = 10.0,
      py::arg("seed") = 0);

  m.def(
      "load_idx",
      [](const std::filesystem::path& images, const std::filesystem::path& labels) {
        return dataset_dict(load_idx(images, labels));
      },
      py::arg("images"), py::arg("labels"));
  m.def(
      "load_isolet", [](const std::filesystem::path& path) { return dataset_dict(load_isolet(path)); },
      py::arg("path"));
  m.def(
      "load_dense",
      [](const std::filesystem::path& path, const std::string& label_col) {
        return dataset_dict(load_dense(path, LabelColumn::parse(label_col)));
      },
      py::arg("path"), py::arg("label_col") = "last");
}
