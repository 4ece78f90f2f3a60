# Copyright 2026 The MPCA Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Multiplicative-factoring PCA.

Data matrices are m x n with one sample per column, as in the C++ library.
"""

from ._core import (
    ArgumentError,
    FormatError,
    IoError,
    Model,
    NumericalError,
    ProtocolError,
    cosine_factor,
    dimension_sweep,
    evaluate_once,
    fit,
    knn_classify,
    largest_principal_angle,
    load_dense,
    load_idx,
    load_isolet,
    multipliers_from_raw,
    pca_fit,
    stratified_split,
    svd,
    synthesize,
    total_distance_factor,
)

__all__ = [
    "ArgumentError",
    "FormatError",
    "IoError",
    "Model",
    "NumericalError",
    "ProtocolError",
    "cosine_factor",
    "dimension_sweep",
    "evaluate_once",
    "fit",
    "knn_classify",
    "largest_principal_angle",
    "load_dense",
    "load_idx",
    "load_isolet",
    "multipliers_from_raw",
    "pca_fit",
    "stratified_split",
    "svd",
    "synthesize",
    "total_distance_factor",
]
