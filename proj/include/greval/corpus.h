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

#ifndef GREVAL_CORPUS_H_
#define GREVAL_CORPUS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "greval/gr.h"

namespace greval {

struct Diagnostic {
  enum class Severity { kError, kWarning };

  Severity severity;
  int line;  // 1-based source line; 0 when no single line applies
  std::string message;
};

inline bool is_error(const Diagnostic& d) {
  return d.severity == Diagnostic::Severity::kError;
}
bool has_errors(const std::vector<Diagnostic>& diagnostics);

// `file:line: [warning:] message` rendering for terminal output.
std::string format_diagnostic(const Diagnostic& d, std::string_view filename);

struct Sentence {
  std::string id;
  std::optional<char> genre;  // one of 'A', 'G', 'J'
  std::optional<std::string> text;
  std::vector<GrInstance> grs;  // multiset; duplicates are meaningful

  // Source bookkeeping, populated by the parser; not part of the value.
  int header_line = 0;
  std::vector<int> gr_lines;  // parallel to grs; empty if not file-backed

  // Line number for grs[i], or 0 when unknown.
  int line_of(size_t i) const {
    return i < gr_lines.size() ? gr_lines[i] : 0;
  }

  bool operator==(const Sentence& o) const {
    return id == o.id && genre == o.genre && text == o.text && grs == o.grs;
  }
};

struct Corpus {
  std::vector<Sentence> sentences;  // ids unique, order preserved

  const Sentence* find(std::string_view id) const;
  size_t total_grs() const;

  bool operator==(const Corpus& o) const { return sentences == o.sentences; }
};

inline bool is_valid_genre(char c) { return c == 'A' || c == 'G' || c == 'J'; }

}  // namespace greval

#endif  // GREVAL_CORPUS_H_
