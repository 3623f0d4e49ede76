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

#ifndef GREVAL_REPORT_H_
#define GREVAL_REPORT_H_

#include <optional>
#include <string>
#include <string_view>

namespace greval {

// Output format shared by every report-producing command.
enum class ReportFormat {
  kText,
  kCsv,
  kJson,
};

const char* format_name(ReportFormat format);
std::optional<ReportFormat> format_from_name(std::string_view name);

// Renders a percentage to one decimal place, rounding exact halves away
// from zero (28.25 -> "28.3" independent of the libc printf tie rule).
std::string percent_1dp(double percent);

// Minimal CSV field quoting: wraps the field in double quotes when it
// contains a comma, quote, or newline, doubling embedded quotes.
std::string csv_field(std::string_view value);

}  // namespace greval

#endif  // GREVAL_REPORT_H_
