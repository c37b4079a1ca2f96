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
#include "cli_support.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "knorm/bench.h"
#include "knorm/status_macros.h"

namespace knorm::cli {

int ExitCodeFor(const absl::Status& status) {
  if (status.ok()) return kExitOk;
  switch (status.code()) {
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kOutOfRange:
      return kExitValidation;
    default:
      return kExitRuntime;
  }
}

absl::StatusOr<std::vector<int>> ParseIntList(const std::string& text) {
  std::vector<int> values;
  for (absl::string_view item : absl::StrSplit(text, ',')) {
    item = absl::StripAsciiWhitespace(item);
    if (item.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("Empty item in integer list '", text, "'"));
    }
    std::vector<absl::string_view> parts = absl::StrSplit(item, ':');
    if (parts.size() > 3) {
      return absl::InvalidArgumentError(
          absl::StrCat("Bad range '", item, "'; expected a, a:b or a:b:s"));
    }
    int bounds[3] = {0, 0, 1};
    for (size_t i = 0; i < parts.size(); ++i) {
      if (!absl::SimpleAtoi(parts[i], &bounds[i])) {
        return absl::InvalidArgumentError(
            absl::StrCat("Bad integer '", parts[i], "' in '", text, "'"));
      }
    }
    if (parts.size() == 1) {
      values.push_back(bounds[0]);
      continue;
    }
    const int lo = bounds[0];
    const int hi = bounds[1];
    const int step = bounds[2];
    if (step <= 0 || hi < lo) {
      return absl::InvalidArgumentError(
          absl::StrCat("Bad range '", item, "'; need lo <= hi and step > 0"));
    }
    for (int64_t v = lo; v <= hi; v += step) {
      values.push_back(static_cast<int>(v));
    }
  }
  return values;
}

std::string FormatPoint(const Point& x) {
  return absl::StrJoin(x, ",", [](std::string* out, double v) {
    out->append(FormatDouble(v));
  });
}

absl::StatusOr<Point> ParsePoint(const std::string& text) {
  Point x;
  for (absl::string_view token :
       absl::StrSplit(text, absl::ByAnyChar(", \t\r\n"), absl::SkipEmpty())) {
    double v = 0.0;
    const std::from_chars_result r =
        std::from_chars(token.data(), token.data() + token.size(), v);
    if (r.ec != std::errc() || r.ptr != token.data() + token.size() ||
        !std::isfinite(v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("Bad real number '", token, "'"));
    }
    x.push_back(v);
  }
  return x;
}

namespace {

absl::StatusOr<std::string> ReadFile(const std::string& path,
                                     absl::string_view what) {
  std::ifstream file(path);
  if (!file) {
    return absl::InvalidArgumentError(
        absl::StrCat("Cannot read ", what, " file '", path, "'"));
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

absl::StatusOr<Point> ReadPointFile(const std::string& path) {
  ASSIGN_OR_RETURN(const std::string text, ReadFile(path, "statistic"));
  return ParsePoint(text);
}

absl::StatusOr<std::vector<std::pair<std::string, std::string>>>
ParseFlatConfig(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> entries;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    line = absl::StripAsciiWhitespace(line);
    if (line.empty() || line.front() == '#') continue;
    const size_t eq = line.find('=');
    if (eq == absl::string_view::npos) {
      return absl::InvalidArgumentError(absl::StrCat(
          "Config line ", line_number, " is not key=value: '", line, "'"));
    }
    absl::string_view key = absl::StripAsciiWhitespace(line.substr(0, eq));
    absl::string_view value = absl::StripAsciiWhitespace(line.substr(eq + 1));
    absl::ConsumePrefix(&key, "--");
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty() || key == "config") {
      return absl::InvalidArgumentError(
          absl::StrCat("Config line ", line_number, " has a bad key"));
    }
    entries.emplace_back(std::string(key), std::string(value));
  }
  return entries;
}

absl::StatusOr<std::vector<std::string>> ExpandConfigFlag(
    const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  std::string config_path;
  std::set<std::string> explicit_keys;
  for (size_t i = 0; i < args.size(); ++i) {
    absl::string_view arg = args[i];
    if (arg == "--config") {
      if (i + 1 >= args.size()) {
        return absl::InvalidArgumentError("--config needs a file path");
      }
      config_path = args[++i];
      continue;
    }
    if (absl::ConsumePrefix(&arg, "--config=")) {
      config_path = std::string(arg);
      continue;
    }
    if (absl::ConsumePrefix(&arg, "--")) {
      explicit_keys.insert(std::string(arg.substr(0, arg.find('='))));
    }
    kept.push_back(args[i]);
  }
  if (config_path.empty()) return kept;
  ASSIGN_OR_RETURN(const std::string text, ReadFile(config_path, "config"));
  ASSIGN_OR_RETURN(const auto entries, ParseFlatConfig(text));
  // Injected after the program name and subcommand so the subcommand parser
  // sees them.
  const size_t insert_at = std::min<size_t>(kept.size(), 2);
  std::vector<std::string> injected;
  for (const auto& [key, value] : entries) {
    if (explicit_keys.count(key) > 0) continue;
    injected.push_back(absl::StrCat("--", key));
    injected.push_back(value);
  }
  kept.insert(kept.begin() + insert_at, injected.begin(), injected.end());
  return kept;
}

}  // namespace knorm::cli
