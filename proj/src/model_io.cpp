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

#include <mpca/model_io.hpp>

#include <mpca/datasets.hpp>
#include <mpca/error.hpp>

#include <json.hpp>

namespace mpca {

namespace {

using Json = nlohmann::ordered_json;

std::vector<double> to_std(const Eigen::Ref<const Vector>& v) { return {v.data(), v.data() + v.size()}; }

Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

std::string format_model(const MpcaModel& model) {
  const Eigen::Index m = model.feature_dim();
  const Eigen::Index r = model.dim();
  std::vector<double> basis;
  basis.reserve(static_cast<std::size_t>(m * r));
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) basis.push_back(model.basis(i, j));
  }
  Json doc;
  doc["format"] = "mpca-model";
  doc["version"] = kModelFormatVersion;
  doc["method"] = model.method;
  doc["m"] = m;
  doc["r"] = r;
  doc["metric"] = std::string(to_string(model.config.metric));
  doc["orientation"] = std::string(to_string(model.config.orientation));
  doc["update"] = std::string(to_string(model.config.update));
  doc["epsilon"] = model.config.epsilon;
  doc["tolerance"] = model.config.tolerance;
  doc["max_iterations"] = model.config.max_iterations;
  doc["recenter"] = model.config.recenter;
  doc["iterations"] = model.iterations;
  doc["mean"] = to_std(model.mean.values);
  doc["basis"] = std::move(basis);
  doc["singular_values"] = to_std(model.singular_values);
  doc["weights"] = model.weights.values();
  doc["loss_history"] = model.loss_history;
  doc["diagnostics"] = model.diagnostics;
  return doc.dump(2) + "\n";
}

MpcaModel parse_model(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("model: ") + e.what(), e.byte);
  }
  try {
    if (doc.at("format").get<std::string>() != "mpca-model") throw FormatError("model: not an mpca-model document", 0);
    const int version = doc.at("version").get<int>();
    if (version != kModelFormatVersion) {
      throw FormatError("model: unsupported format version " + std::to_string(version), 0);
    }
    MpcaModel model;
    model.method = doc.at("method").get<std::string>();
    const auto m = doc.at("m").get<Eigen::Index>();
    const auto r = doc.at("r").get<Eigen::Index>();
    model.config.metric = parse_metric(doc.at("metric").get<std::string>());
    model.config.orientation = parse_orientation(doc.at("orientation").get<std::string>());
    model.config.update = parse_weight_update(doc.at("update").get<std::string>());
    model.config.epsilon = doc.at("epsilon").get<double>();
    model.config.tolerance = doc.at("tolerance").get<double>();
    model.config.max_iterations = doc.at("max_iterations").get<std::size_t>();
    model.config.recenter = doc.at("recenter").get<bool>();
    model.config.target_dim = r;
    model.iterations = doc.at("iterations").get<std::size_t>();
    const auto mean = doc.at("mean").get<std::vector<double>>();
    const auto basis = doc.at("basis").get<std::vector<double>>();
    const auto sigma = doc.at("singular_values").get<std::vector<double>>();
    if (m < 1 || r < 1 || static_cast<Eigen::Index>(mean.size()) != m ||
        static_cast<Eigen::Index>(basis.size()) != m * r || static_cast<Eigen::Index>(sigma.size()) != r) {
      throw FormatError("model: array lengths do not match m = " + std::to_string(m) + ", r = " + std::to_string(r),
                        0);
    }
    model.mean.values = to_vector(mean);
    model.basis.resize(m, r);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < r; ++j) model.basis(i, j) = basis[static_cast<std::size_t>(i * r + j)];
    }
    model.singular_values = to_vector(sigma);
    model.weights = WeightVector(doc.at("weights").get<std::vector<double>>());
    model.loss_history = doc.at("loss_history").get<std::vector<double>>();
    if (doc.contains("diagnostics")) model.diagnostics = doc.at("diagnostics").get<std::vector<std::string>>();
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("model: ") + e.what(), 0);
  } catch (const ArgumentError& e) {
    throw FormatError(std::string("model: ") + e.what(), 0);
  }
}

MpcaModel load_model(const std::filesystem::path& path) { return parse_model(read_file(path)); }

}  // namespace mpca
