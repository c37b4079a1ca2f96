//
// Copyright 2026 The knorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Helpers shared by the knorm command-line tool and its tests.

#ifndef KNORM_TOOLS_CLI_SUPPORT_H_
#define KNORM_TOOLS_CLI_SUPPORT_H_

#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "knorm/geometry.h"

namespace knorm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitRuntime = 3;

// INVALID_ARGUMENT and OUT_OF_RANGE map to kExitValidation, every other
// error to kExitRuntime.
int ExitCodeFor(const absl::Status& status);

// Comma-separated items, each an integer `a`, an inclusive range `a:b`, or a
// stepped range `a:b:s` with s > 0. Example: "2,5:7,10:20:5" gives
// 2 5 6 7 10 15 20.
absl::StatusOr<std::vector<int>> ParseIntList(const std::string& text);

// Coordinates in shortest round-trip form joined by ','.
std::string FormatPoint(const Point& x);

// Reals separated by commas and/or whitespace.
absl::StatusOr<Point> ParsePoint(const std::string& text);

// ParsePoint applied to a file's contents.
absl::StatusOr<Point> ReadPointFile(const std::string& path);

// Parses a flat config file: one `key=value` per line, where key is a flag
// name without the leading dashes. Blank lines and lines starting with '#'
// are skipped; surrounding whitespace and double quotes are trimmed.
absl::StatusOr<std::vector<std::pair<std::string, std::string>>>
ParseFlatConfig(const std::string& text);

// Rewrites a command line so that `--config FILE` (or `--config=FILE`) is
// replaced by the file's entries as `--key value` pairs. Flags given
// explicitly on the command line take precedence over the file.
absl::StatusOr<std::vector<std::string>> ExpandConfigFlag(
    const std::vector<std::string>& args);

}  // namespace knorm::cli

#endif  // KNORM_TOOLS_CLI_SUPPORT_H_
