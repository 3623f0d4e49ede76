// Copyright 2026 The greval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "greval/report.h"

#include <cmath>
#include <cstdio>

namespace greval {

const char* format_name(ReportFormat format) {
  switch (format) {
    case ReportFormat::kText:
      return "text";
    case ReportFormat::kCsv:
      return "csv";
    case ReportFormat::kJson:
      return "json";
  }
  return "?";
}

std::optional<ReportFormat> format_from_name(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  return std::nullopt;
}

std::string percent_1dp(double percent) {
  // Round to one decimal in decimal space first so that values printed by
  // different libc printf tie-breaking rules stay identical.
  double rounded = std::round(percent * 10.0) / 10.0;
  rounded += 0.0;  // normalize -0.0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", rounded);
  return buf;
}

std::string csv_field(std::string_view value) {
  bool needs_quotes = value.find_first_of(",\"\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace greval
