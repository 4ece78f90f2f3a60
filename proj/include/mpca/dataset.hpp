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

#ifndef MPCA_DATASET_HPP_
#define MPCA_DATASET_HPP_

#include <mpca/numerics.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace mpca {

// Samples are the columns of `data`; labels[i] is the class of column i.
struct LabeledDataset {
  DataMatrix data;
  std::vector<int> labels;
  std::string name;
  // Original label text per class id, when the source used other ids.
  std::vector<std::string> class_names;
  std::vector<std::string> diagnostics;

  // Throws ArgumentError if labels.size() != data.cols() or a label is negative.
  void validate() const;
  int num_classes() const;
  // Columns listed in `index`, in that order.
  LabeledDataset subset(const std::vector<std::size_t>& index) const;
};

}  // namespace mpca

#endif  // MPCA_DATASET_HPP_
