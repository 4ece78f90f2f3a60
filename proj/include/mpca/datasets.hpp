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

// Dataset readers and the synthetic corrupted-subspace generator.

#ifndef MPCA_DATASETS_HPP_
#define MPCA_DATASETS_HPP_

#include <mpca/dataset.hpp>
#include <mpca/numerics.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mpca {

inline constexpr std::uint32_t kIdxLabelMagic = 2049;
inline constexpr std::uint32_t kIdxImageMagic = 2051;

// Parses an IDX image/label file pair (big-endian). Pixels are scaled to [0, 1]
// and each image becomes one column of length rows * cols.
LabeledDataset load_idx(const std::filesystem::path& images, const std::filesystem::path& labels);
LabeledDataset parse_idx(std::string_view image_bytes, std::string_view label_bytes);

// UCI Isolet layout: 617 comma-separated features then a class value 1..26.
LabeledDataset load_isolet(const std::filesystem::path& path);
LabeledDataset parse_isolet(std::string_view text);

inline constexpr int kIsoletFeatures = 617;
inline constexpr int kIsoletClasses = 26;

// Where the label sits in a dense row.
struct LabelColumn {
  enum class Kind { kNone, kFirst, kLast, kIndex } kind = Kind::kLast;
  std::size_t index = 0;

  // "none", "first", "last" or a 0-based column index.
  static LabelColumn parse(std::string_view spec);
};

// One sample per line, fields separated by commas, tabs or whitespace. Lines
// starting with '#' and blank lines are skipped. Labels are remapped to
// contiguous ids in increasing numeric order; class_names keeps the originals.
LabeledDataset load_dense(const std::filesystem::path& path, LabelColumn label_column);
LabeledDataset parse_dense(std::string_view text, LabelColumn label_column);

// Writes `ds` as comma-separated rows with the label last, shortest
// round-trip number formatting and optional '#' header lines.
std::string format_dense(const LabeledDataset& ds, const std::vector<std::string>& header = {});
// Writes a plain matrix, one matrix row per line.
std::string format_matrix(const Matrix& values, const std::vector<std::string>& header = {});

struct SyntheticSpec {
  Eigen::Index feature_dim = 10;
  std::size_t inlier_count = 100;
  std::size_t outlier_count = 10;
  Eigen::Index subspace_dim = 1;
  double noise_sigma = 0.05;
  double outlier_magnitude = 10.0;
  std::uint64_t seed = 0;

  void validate() const;
  // Flat key = value block; unknown keys are an error.
  static SyntheticSpec parse(std::string_view text);
  std::string to_text() const;
};

struct GroundTruth {
  Matrix basis;                    // m x subspace_dim, orthonormal
  std::vector<bool> outlier_mask;  // one flag per column
};

// Inliers are basis * z + noise with z ~ N(0, I); outliers are uniformly
// random directions scaled to outlier_magnitude and appended after the
// inliers. The label of a column is 1 when its coordinate along the first
// basis vector is non-negative, else 0.
std::pair<LabeledDataset, GroundTruth> synthesize(const SyntheticSpec& spec);

// Reads a whole file as bytes. Throws IoError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace mpca

#endif  // MPCA_DATASETS_HPP_
