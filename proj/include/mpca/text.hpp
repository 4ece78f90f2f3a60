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

// Small text helpers shared by readers, writers and the command line.

#ifndef MPCA_TEXT_HPP_
#define MPCA_TEXT_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mpca {

// Shortest representation that parses back to the same double.
std::string format_double(double value);
// Fixed notation with `digits` decimals.
std::string format_fixed(double value, int digits);

// Whole-field numeric parse; nullopt on trailing garbage or empty input.
std::optional<double> parse_double(std::string_view field);

std::string_view trim(std::string_view s);

// Flat "key = value" (or "key: value") lines. '#' starts a comment, blank lines
// are ignored. Throws FormatError naming the line on malformed input or a
// repeated key.
std::map<std::string, std::string> parse_key_values(std::string_view text);

// "a,b,c" -> {"a", "b", "c"} with surrounding blanks trimmed.
std::vector<std::string> split_list(std::string_view text, char sep = ',');

}  // namespace mpca

#endif  // MPCA_TEXT_HPP_
