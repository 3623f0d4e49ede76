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

#include "greval/corpus_io.h"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace greval {

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const Diagnostic& d : diagnostics) {
    if (is_error(d)) return true;
  }
  return false;
}

std::string format_diagnostic(const Diagnostic& d, std::string_view filename) {
  std::ostringstream out;
  out << filename;
  if (d.line > 0) out << ':' << d.line;
  out << ": ";
  if (d.severity == Diagnostic::Severity::kWarning) out << "warning: ";
  out << d.message;
  return out.str();
}

const Sentence* Corpus::find(std::string_view id) const {
  for (const Sentence& s : sentences) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

size_t Corpus::total_grs() const {
  size_t n = 0;
  for (const Sentence& s : sentences) n += s.grs.size();
  return n;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    }
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
    }
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool has_internal_whitespace(std::string_view s) {
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

// Parses one comma-separated slot token (already trimmed). `initial_gr_slot`
// enables bare-relation-name recognition. On failure fills *err.
std::optional<SlotValue> parse_slot_token(std::string_view tok,
                                          bool initial_gr_slot,
                                          std::string* err) {
  if (tok.empty()) {
    *err = "empty slot token";
    return std::nullopt;
  }
  if (tok == "_") return SlotValue{Unspecified{}};
  if (tok == "Pro") return SlotValue{Pro{}};
  if (initial_gr_slot) {
    if (auto rel = relation_from_name(tok)) return SlotValue{GrName{*rel}};
  }
  if (has_internal_whitespace(tok)) {
    // Multi-token content reduces to its final token, case-folded.
    try {
      return SlotValue{normalize_lexeme(tok)};
    } catch (const std::invalid_argument& e) {
      *err = e.what();
      return std::nullopt;
    }
  }
  // Optional trailing `:N` token index.
  std::string_view lemma = tok;
  std::optional<int> index;
  size_t colon = tok.rfind(':');
  if (colon != std::string_view::npos && colon + 1 < tok.size()) {
    std::string_view digits = tok.substr(colon + 1);
    bool numeric = true;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        numeric = false;
        break;
      }
    }
    if (numeric) {
      if (digits.size() > 9) {
        *err = "token index out of range in '" + std::string(tok) + "'";
        return std::nullopt;
      }
      int value = 0;
      for (char c : digits) value = value * 10 + (c - '0');
      if (value < 1) {
        *err = "token index must be positive in '" + std::string(tok) + "'";
        return std::nullopt;
      }
      lemma = tok.substr(0, colon);
      index = value;
    }
  }
  if (!is_valid_lemma(lemma)) {
    *err = "malformed lexeme: '" + std::string(lemma) + "'";
    return std::nullopt;
  }
  return SlotValue{Lexeme{std::string(lemma), index}};
}

class Parser {
 public:
  ParseResult run(std::istream& in) {
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      std::string_view line = raw;
      std::string_view stripped = trim(line);
      if (stripped.empty()) {
        finish_sentence();
        continue;
      }
      if (stripped.front() == '%') continue;  // comment, not a terminator
      if (stripped.front() == '#') {
        handle_header(line, lineno);
      } else {
        handle_gr_line(line, lineno);
      }
    }
    finish_sentence();
    ParseResult result;
    result.diagnostics = std::move(diags_);
    if (!has_errors(result.diagnostics)) result.corpus = std::move(corpus_);
    return result;
  }

 private:
  void error(int line, std::string msg) {
    diags_.push_back({Diagnostic::Severity::kError, line, std::move(msg)});
  }
  void warning(int line, std::string msg) {
    diags_.push_back({Diagnostic::Severity::kWarning, line, std::move(msg)});
  }

  void finish_sentence() {
    if (open_ && !discard_) corpus_.sentences.push_back(std::move(current_));
    open_ = false;
    discard_ = false;
    current_ = Sentence{};
  }

  void handle_header(std::string_view line, int lineno) {
    if (open_) {
      warning(lineno, "missing blank line before sentence header");
      finish_sentence();
    }
    open_ = true;
    discard_ = false;
    current_ = Sentence{};
    current_.header_line = lineno;

    std::string_view head = line;
    std::optional<std::string> text;
    size_t bar = line.find('|');
    if (bar != std::string_view::npos) {
      head = line.substr(0, bar);
      std::string_view raw_text = line.substr(bar + 1);
      if (!raw_text.empty() && raw_text.front() == ' ') {
        raw_text.remove_prefix(1);
      }
      text = std::string(raw_text);
    }
    auto tokens = split_whitespace(head);
    if (tokens.size() < 3 || tokens[0] != "#" || tokens[1] != "sent") {
      error(lineno, "malformed header (expected '# sent <id>')");
      discard_ = true;
      return;
    }
    current_.id = std::string(tokens[2]);
    size_t next = 3;
    if (next < tokens.size() && tokens[next] == "genre") {
      if (next + 1 >= tokens.size() || tokens[next + 1].size() != 1 ||
          !is_valid_genre(tokens[next + 1][0])) {
        error(lineno, "invalid genre" +
                          (next + 1 < tokens.size()
                               ? " '" + std::string(tokens[next + 1]) + "'"
                               : std::string()));
        discard_ = true;
        return;
      }
      current_.genre = tokens[next + 1][0];
      next += 2;
    }
    if (next != tokens.size()) {
      error(lineno, "malformed header (unexpected '" +
                        std::string(tokens[next]) + "')");
      discard_ = true;
      return;
    }
    current_.text = std::move(text);
    if (!seen_ids_.insert(current_.id).second) {
      error(lineno, "duplicate sentence id '" + current_.id + "'");
      discard_ = true;
    }
  }

  void handle_gr_line(std::string_view line, int lineno) {
    if (!open_) {
      error(lineno, "GR line outside a sentence (missing '# sent' header)");
      return;
    }
    size_t open_paren = line.find('(');
    if (open_paren == std::string_view::npos) {
      error(lineno, "malformed GR line (missing '(')");
      return;
    }
    std::string_view name = trim(line.substr(0, open_paren));
    auto relation = relation_from_name(name);
    if (!relation) {
      error(lineno, "unknown relation '" + std::string(name) + "'");
      return;
    }
    size_t close_paren = line.rfind(')');
    if (close_paren == std::string_view::npos || close_paren < open_paren) {
      error(lineno, "malformed GR line (missing ')')");
      return;
    }
    if (!trim(line.substr(close_paren + 1)).empty()) {
      error(lineno, "trailing characters after ')'");
      return;
    }
    std::string_view inner =
        line.substr(open_paren + 1, close_paren - open_paren - 1);

    std::vector<SlotValue> values;
    if (!trim(inner).empty()) {
      auto sig = signature_of(*relation);
      size_t start = 0;
      size_t slot_index = 0;
      bool bad = false;
      while (true) {
        size_t comma = inner.find(',', start);
        std::string_view field =
            comma == std::string_view::npos
                ? inner.substr(start)
                : inner.substr(start, comma - start);
        bool igr_slot = slot_index < sig.size() &&
                        sig[slot_index] == Slot::kInitialGr;
        std::string err;
        auto value = parse_slot_token(trim(field), igr_slot, &err);
        if (!value) {
          error(lineno, err);
          bad = true;
          break;
        }
        values.push_back(std::move(*value));
        ++slot_index;
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      if (bad) return;
    }
    try {
      GrInstance gr(*relation, std::move(values));
      if (!discard_) {
        current_.grs.push_back(std::move(gr));
        current_.gr_lines.push_back(lineno);
      }
    } catch (const std::invalid_argument& e) {
      error(lineno, e.what());
    }
  }

  std::vector<Diagnostic> diags_;
  Corpus corpus_;
  std::unordered_set<std::string> seen_ids_;
  bool open_ = false;
  bool discard_ = false;
  Sentence current_;
};

}  // namespace

ParseResult parse_corpus(std::istream& in) {
  Parser parser;
  return parser.run(in);
}

ParseResult parse_corpus_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_corpus(in);
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const Sentence& s : corpus.sentences) {
    out << "# sent " << s.id;
    if (s.genre) out << " genre " << *s.genre;
    if (s.text) out << " | " << *s.text;
    out << '\n';
    for (const GrInstance& gr : s.grs) out << to_string(gr) << '\n';
    out << '\n';
  }
}

std::string write_corpus_string(const Corpus& corpus) {
  std::ostringstream out;
  write_corpus(corpus, out);
  return out.str();
}

namespace {

bool contains_uppercase(std::string_view s) {
  for (char c : s) {
    if (std::isupper(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

}  // namespace

std::vector<Diagnostic> validate_corpus(const Corpus& corpus,
                                        CorpusRole role) {
  std::vector<Diagnostic> diags;
  for (const Sentence& s : corpus.sentences) {
    for (size_t i = 0; i < s.grs.size(); ++i) {
      const GrInstance& gr = s.grs[i];
      int line = s.line_of(i);
      Relation r = gr.relation();
      if (role == CorpusRole::kGold && !is_leaf(r)) {
        diags.push_back({Diagnostic::Severity::kWarning, line,
                         "non-leaf relation '" +
                             std::string(relation_name(r)) +
                             "' in gold corpus"});
      }
      if (role == CorpusRole::kGold && type_slot_relaxable(r)) {
        const SlotValue* type = gr.slot(Slot::kType);
        if (type && is_unspecified(*type)) {
          diags.push_back({Diagnostic::Severity::kWarning, line,
                           "unspecified type slot in gold '" +
                               std::string(relation_name(r)) + "' GR"});
        }
      }
      const SlotValue* head = gr.slot(Slot::kHead);
      if (head) {
        if (const auto* lex = std::get_if<Lexeme>(head)) {
          if (contains_uppercase(lex->lemma)) {
            diags.push_back({Diagnostic::Severity::kWarning, line,
                             "uppercase head lexeme '" + lex->lemma + "'"});
          }
        }
      }
    }
  }
  return diags;
}

}  // namespace greval
