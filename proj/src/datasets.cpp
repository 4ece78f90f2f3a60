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

#include <mpca/datasets.hpp>

#include <mpca/error.hpp>
#include <mpca/text.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>

namespace mpca {

void LabeledDataset::validate() const {
  if (static_cast<Eigen::Index>(labels.size()) != data.cols()) {
    throw ArgumentError("dataset '" + name + "' has " + std::to_string(data.cols()) + " samples but " +
                        std::to_string(labels.size()) + " labels");
  }
  for (int l : labels) {
    if (l < 0) throw ArgumentError("dataset '" + name + "' has a negative label");
  }
}

int LabeledDataset::num_classes() const {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

LabeledDataset LabeledDataset::subset(const std::vector<std::size_t>& index) const {
  if (index.empty()) throw ArgumentError("empty subset of dataset '" + name + "'");
  Matrix values(data.rows(), static_cast<Eigen::Index>(index.size()));
  std::vector<int> sub_labels;
  sub_labels.reserve(index.size());
  for (std::size_t j = 0; j < index.size(); ++j) {
    if (index[j] >= labels.size()) throw ArgumentError("subset index out of range");
    values.col(static_cast<Eigen::Index>(j)) = data.values().col(static_cast<Eigen::Index>(index[j]));
    sub_labels.push_back(labels[index[j]]);
  }
  return LabeledDataset{DataMatrix(std::move(values)), std::move(sub_labels), name, class_names, {}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// ---------------------------------------------------------------------------
// IDX

namespace {

std::uint32_t read_be32(std::string_view bytes, std::size_t offset, const char* what) {
  if (bytes.size() < offset + 4) {
    throw FormatError(std::string(what) + ": truncated header at offset " + std::to_string(offset), offset);
  }
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < 4; ++i) v = (v << 8) | static_cast<unsigned char>(bytes[offset + i]);
  return v;
}

void expect_magic(std::string_view bytes, std::uint32_t expected, const char* what) {
  const std::uint32_t magic = read_be32(bytes, 0, what);
  if (magic != expected) {
    throw FormatError(std::string(what) + ": bad magic " + std::to_string(magic) + " at offset 0 (expected " +
                          std::to_string(expected) + ")",
                      0);
  }
}

void expect_size(std::string_view bytes, std::size_t expected, std::size_t header, const char* what) {
  if (bytes.size() < expected) {
    throw FormatError(std::string(what) + ": truncated payload, " + std::to_string(bytes.size() - header) +
                          " bytes after offset " + std::to_string(header) + " but " +
                          std::to_string(expected - header) + " expected",
                      bytes.size());
  }
  if (bytes.size() > expected) {
    throw FormatError(std::string(what) + ": " + std::to_string(bytes.size() - expected) +
                          " trailing bytes at offset " + std::to_string(expected),
                      expected);
  }
}

}  // namespace

LabeledDataset parse_idx(std::string_view image_bytes, std::string_view label_bytes) {
  expect_magic(image_bytes, kIdxImageMagic, "idx images");
  expect_magic(label_bytes, kIdxLabelMagic, "idx labels");
  const std::size_t count = read_be32(image_bytes, 4, "idx images");
  const std::size_t rows = read_be32(image_bytes, 8, "idx images");
  const std::size_t cols = read_be32(image_bytes, 12, "idx images");
  const std::size_t label_count = read_be32(label_bytes, 4, "idx labels");
  if (count != label_count) {
    throw FormatError("idx image count " + std::to_string(count) + " does not match label count " +
                          std::to_string(label_count),
                      4);
  }
  const std::size_t pixels = rows * cols;
  if (count == 0 || pixels == 0) throw FormatError("idx file declares no data", 4);
  expect_size(image_bytes, 16 + count * pixels, 16, "idx images");
  expect_size(label_bytes, 8 + count, 8, "idx labels");

  Matrix values(static_cast<Eigen::Index>(pixels), static_cast<Eigen::Index>(count));
  const auto* px = reinterpret_cast<const unsigned char*>(image_bytes.data() + 16);
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i < pixels; ++i) {
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = px[j * pixels + i] / 255.0;
    }
  }
  std::vector<int> labels(count);
  for (std::size_t j = 0; j < count; ++j) labels[j] = static_cast<unsigned char>(label_bytes[8 + j]);
  LabeledDataset ds{DataMatrix(std::move(values)), std::move(labels), "idx", {}, {}};
  ds.diagnostics.push_back("pixels scaled to [0, 1] by 1/255; " + std::to_string(rows) + "x" +
                           std::to_string(cols) + " images flattened row-major");
  return ds;
}

LabeledDataset load_idx(const std::filesystem::path& images, const std::filesystem::path& labels) {
  LabeledDataset ds = parse_idx(read_file(images), read_file(labels));
  ds.name = images.filename().string();
  return ds;
}

// ---------------------------------------------------------------------------
// Delimited text

namespace {

struct TextRow {
  std::size_t line_no;
  std::vector<std::string_view> fields;
};

char detect_delimiter(std::string_view line) {
  if (line.find(',') != std::string_view::npos) return ',';
  if (line.find('\t') != std::string_view::npos) return '\t';
  if (line.find(';') != std::string_view::npos) return ';';
  return ' ';
}

std::vector<std::string_view> split_fields(std::string_view line, char delim) {
  std::vector<std::string_view> out;
  if (delim == ' ') {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      out.push_back(line.substr(start, i - start));
    }
    return out;
  }
  while (true) {
    const auto pos = line.find(delim);
    out.push_back(trim(line.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return out;
}

// Non-comment, non-blank rows of `text`, all split with the delimiter of the
// first such row.
std::vector<TextRow> split_rows(std::string_view text) {
  std::vector<TextRow> rows;
  char delim = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (delim == 0) delim = detect_delimiter(line);
    rows.push_back({line_no, split_fields(line, delim)});
  }
  return rows;
}

double parse_field(std::string_view field, std::size_t line_no, std::size_t column) {
  const auto v = parse_double(field);
  if (!v || !std::isfinite(*v)) {
    throw FormatError("line " + std::to_string(line_no) + ", field " + std::to_string(column + 1) +
                          ": not a finite number: '" + std::string(field) + "'",
                      line_no);
  }
  return *v;
}

}  // namespace

LabeledDataset parse_isolet(std::string_view text) {
  const std::vector<TextRow> rows = split_rows(text);
  if (rows.empty()) throw FormatError("isolet: no data rows", 0);
  constexpr std::size_t kFields = kIsoletFeatures + 1;
  Matrix values(kIsoletFeatures, static_cast<Eigen::Index>(rows.size()));
  std::vector<int> labels(rows.size());
  std::size_t out_of_range = 0;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto& row = rows[j];
    if (row.fields.size() != kFields) {
      throw FormatError("isolet line " + std::to_string(row.line_no) + ": " + std::to_string(row.fields.size()) +
                            " fields, expected " + std::to_string(kFields),
                        row.line_no);
    }
    for (std::size_t i = 0; i < kIsoletFeatures; ++i) {
      const double v = parse_field(row.fields[i], row.line_no, i);
      if (v < -1.0 || v > 1.0) ++out_of_range;
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
    const double cls = parse_field(row.fields[kIsoletFeatures], row.line_no, kIsoletFeatures);
    if (cls != std::floor(cls) || cls < 1 || cls > kIsoletClasses) {
      throw FormatError("isolet line " + std::to_string(row.line_no) + ": class value " + format_double(cls) +
                            " is not an integer in 1..26",
                        row.line_no);
    }
    labels[j] = static_cast<int>(cls) - 1;
  }
  LabeledDataset ds{DataMatrix(std::move(values)), std::move(labels), "isolet", {}, {}};
  ds.diagnostics.push_back("isolet rows parsed: " + std::to_string(rows.size()));
  if (out_of_range > 0) {
    ds.diagnostics.push_back("range: " + std::to_string(out_of_range) + " feature value(s) outside [-1, 1]");
  }
  return ds;
}

LabeledDataset load_isolet(const std::filesystem::path& path) { return parse_isolet(read_file(path)); }

LabelColumn LabelColumn::parse(std::string_view spec) {
  spec = trim(spec);
  if (spec == "none") return {Kind::kNone, 0};
  if (spec == "first") return {Kind::kFirst, 0};
  if (spec == "last") return {Kind::kLast, 0};
  std::size_t index = 0;
  const auto res = std::from_chars(spec.data(), spec.data() + spec.size(), index);
  if (res.ec != std::errc() || res.ptr != spec.data() + spec.size()) {
    throw ArgumentError("label column must be none, first, last or a 0-based index, got '" + std::string(spec) +
                        "'");
  }
  return {Kind::kIndex, index};
}

LabeledDataset parse_dense(std::string_view text, LabelColumn label_column) {
  const std::vector<TextRow> rows = split_rows(text);
  if (rows.empty()) throw FormatError("dense: no data rows", 0);
  const std::size_t width = rows.front().fields.size();
  const bool has_label = label_column.kind != LabelColumn::Kind::kNone;
  std::size_t label_at = 0;
  switch (label_column.kind) {
    case LabelColumn::Kind::kFirst:
      label_at = 0;
      break;
    case LabelColumn::Kind::kLast:
      label_at = width - 1;
      break;
    case LabelColumn::Kind::kIndex:
      label_at = label_column.index;
      break;
    case LabelColumn::Kind::kNone:
      break;
  }
  if (has_label && label_at >= width) {
    throw FormatError("dense line " + std::to_string(rows.front().line_no) + ": label column " +
                          std::to_string(label_at) + " out of range for " + std::to_string(width) + " fields",
                      rows.front().line_no);
  }
  const std::size_t features = has_label ? width - 1 : width;
  if (features == 0) throw FormatError("dense: rows carry no feature columns", rows.front().line_no);

  Matrix values(static_cast<Eigen::Index>(features), static_cast<Eigen::Index>(rows.size()));
  std::vector<double> raw_labels(rows.size(), 0.0);
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const auto& row = rows[j];
    if (row.fields.size() != width) {
      throw FormatError("dense line " + std::to_string(row.line_no) + ": " + std::to_string(row.fields.size()) +
                            " fields, expected " + std::to_string(width),
                        row.line_no);
    }
    std::size_t feature = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (has_label && c == label_at) {
        const auto v = parse_double(row.fields[c]);
        if (!v || !std::isfinite(*v)) {
          throw FormatError("dense line " + std::to_string(row.line_no) + ": non-numeric label '" +
                                std::string(row.fields[c]) + "'",
                            row.line_no);
        }
        raw_labels[j] = *v;
        continue;
      }
      values(static_cast<Eigen::Index>(feature++), static_cast<Eigen::Index>(j)) =
          parse_field(row.fields[c], row.line_no, c);
    }
  }

  LabeledDataset ds{DataMatrix(std::move(values)), std::vector<int>(rows.size(), 0), "dense", {}, {}};
  if (has_label) {
    const std::set<double> distinct(raw_labels.begin(), raw_labels.end());
    const std::vector<double> order(distinct.begin(), distinct.end());
    for (std::size_t j = 0; j < rows.size(); ++j) {
      ds.labels[j] = static_cast<int>(std::lower_bound(order.begin(), order.end(), raw_labels[j]) - order.begin());
    }
    std::string mapping = "label mapping:";
    for (std::size_t c = 0; c < order.size(); ++c) {
      ds.class_names.push_back(format_double(order[c]));
      mapping += " " + ds.class_names.back() + "->" + std::to_string(c);
    }
    ds.diagnostics.push_back(std::move(mapping));
  }
  return ds;
}

LabeledDataset load_dense(const std::filesystem::path& path, LabelColumn label_column) {
  LabeledDataset ds = parse_dense(read_file(path), label_column);
  ds.name = path.filename().string();
  return ds;
}

std::string format_dense(const LabeledDataset& ds, const std::vector<std::string>& header) {
  ds.validate();
  std::string out;
  for (const auto& h : header) out += "# " + h + "\n";
  const Matrix& x = ds.data.values();
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      out += format_double(x(i, j));
      out += ',';
    }
    const int label = ds.labels[static_cast<std::size_t>(j)];
    out += static_cast<std::size_t>(label) < ds.class_names.size() ? ds.class_names[label] : std::to_string(label);
    out += '\n';
  }
  return out;
}

std::string format_matrix(const Matrix& values, const std::vector<std::string>& header) {
  std::string out;
  for (const auto& h : header) out += "# " + h + "\n";
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(values(i, j));
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Synthetic data

void SyntheticSpec::validate() const {
  if (feature_dim < 1) throw ArgumentError("feature_dim must be >= 1");
  if (subspace_dim < 1) throw ArgumentError("subspace_dim must be >= 1");
  if (subspace_dim > feature_dim) {
    throw ArgumentError("subspace_dim " + std::to_string(subspace_dim) + " exceeds feature_dim " +
                        std::to_string(feature_dim));
  }
  if (inlier_count + outlier_count == 0) throw ArgumentError("synthetic spec generates no samples");
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) throw ArgumentError("noise_sigma must be >= 0");
  if (!(outlier_magnitude >= 0.0) || !std::isfinite(outlier_magnitude)) {
    throw ArgumentError("outlier_magnitude must be >= 0");
  }
}

namespace {

template <typename Int>
Int parse_count(const std::string& key, const std::string& value) {
  Int out{};
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw ArgumentError("synthetic spec: '" + key + "' must be a non-negative integer, got '" + value + "'");
  }
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  const auto v = parse_double(value);
  if (!v) throw ArgumentError("synthetic spec: '" + key + "' must be a number, got '" + value + "'");
  return *v;
}

}  // namespace

SyntheticSpec SyntheticSpec::parse(std::string_view text) {
  SyntheticSpec spec;
  for (const auto& [key, value] : parse_key_values(text)) {
    if (key == "feature_dim") {
      spec.feature_dim = parse_count<Eigen::Index>(key, value);
    } else if (key == "inlier_count") {
      spec.inlier_count = parse_count<std::size_t>(key, value);
    } else if (key == "outlier_count") {
      spec.outlier_count = parse_count<std::size_t>(key, value);
    } else if (key == "subspace_dim") {
      spec.subspace_dim = parse_count<Eigen::Index>(key, value);
    } else if (key == "noise_sigma") {
      spec.noise_sigma = parse_real(key, value);
    } else if (key == "outlier_magnitude") {
      spec.outlier_magnitude = parse_real(key, value);
    } else if (key == "seed") {
      spec.seed = parse_count<std::uint64_t>(key, value);
    } else {
      throw ArgumentError("synthetic spec: unknown key '" + key + "'");
    }
  }
  spec.validate();
  return spec;
}

std::string SyntheticSpec::to_text() const {
  std::ostringstream out;
  out << "feature_dim = " << feature_dim << "\n"
      << "inlier_count = " << inlier_count << "\n"
      << "outlier_count = " << outlier_count << "\n"
      << "subspace_dim = " << subspace_dim << "\n"
      << "noise_sigma = " << format_double(noise_sigma) << "\n"
      << "outlier_magnitude = " << format_double(outlier_magnitude) << "\n"
      << "seed = " << seed << "\n";
  return out.str();
}

std::pair<LabeledDataset, GroundTruth> synthesize(const SyntheticSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Eigen::Index m = spec.feature_dim;
  const Eigen::Index d = spec.subspace_dim;
  const auto n = static_cast<Eigen::Index>(spec.inlier_count + spec.outlier_count);

  Matrix gaussian(m, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) gaussian(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Matrix> qr(gaussian);
  GroundTruth truth;
  truth.basis = qr.householderQ() * Matrix::Identity(m, d);

  Matrix x(m, n);
  std::vector<int> labels(static_cast<std::size_t>(n));
  truth.outlier_mask.assign(static_cast<std::size_t>(n), false);
  Vector z(d);
  Vector noise(m);
  for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(spec.inlier_count); ++j) {
    for (Eigen::Index k = 0; k < d; ++k) z(k) = normal(rng);
    for (Eigen::Index i = 0; i < m; ++i) noise(i) = normal(rng);
    x.col(j) = truth.basis * z + spec.noise_sigma * noise;
    labels[static_cast<std::size_t>(j)] = z(0) >= 0.0 ? 1 : 0;
  }
  Vector direction(m);
  for (Eigen::Index j = static_cast<Eigen::Index>(spec.inlier_count); j < n; ++j) {
    double norm = 0.0;
    do {
      for (Eigen::Index i = 0; i < m; ++i) direction(i) = normal(rng);
      norm = direction.norm();
    } while (norm == 0.0);
    x.col(j) = direction * (spec.outlier_magnitude / norm);
    labels[static_cast<std::size_t>(j)] = truth.basis.col(0).dot(x.col(j)) >= 0.0 ? 1 : 0;
    truth.outlier_mask[static_cast<std::size_t>(j)] = true;
  }

  LabeledDataset ds{DataMatrix(std::move(x)), std::move(labels), "synthetic", {}, {}};
  ds.diagnostics.push_back("synthetic seed " + std::to_string(spec.seed));
  return {std::move(ds), std::move(truth)};
}

}  // namespace mpca
