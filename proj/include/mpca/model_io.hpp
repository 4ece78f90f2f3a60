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

// Versioned JSON model documents.

#ifndef MPCA_MODEL_IO_HPP_
#define MPCA_MODEL_IO_HPP_

#include <mpca/core.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace mpca {

inline constexpr int kModelFormatVersion = 1;

// Numbers are written in shortest round-trip form, so parse(format(m)) holds
// every stored double exactly.
std::string format_model(const MpcaModel& model);
// Throws FormatError on malformed documents or an unsupported version.
MpcaModel parse_model(std::string_view text);

MpcaModel load_model(const std::filesystem::path& path);

}  // namespace mpca

#endif  // MPCA_MODEL_IO_HPP_
