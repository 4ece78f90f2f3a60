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

#ifndef MPCA_TOOLS_CLI_HPP_
#define MPCA_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace mpca::cli {

// Runs one `mpca` invocation. `args` excludes the program name. Returns the
// process exit code: 0 on success, 1 on usage errors, 2 on invalid input or
// configuration, 3 on numerical failure, 4 on I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpca::cli

#endif  // MPCA_TOOLS_CLI_HPP_
