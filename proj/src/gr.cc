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

#include "greval/gr.h"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace greval {

namespace {

char ascii_lower(char c) {
  return static_cast<char>(
      std::tolower(static_cast<unsigned char>(c)));
}

}  // namespace

bool is_unspecified(const SlotValue& v) {
  return std::holds_alternative<Unspecified>(v);
}

bool lemma_equal(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
  }
  return true;
}

bool slot_values_match(const SlotValue& a, const SlotValue& b) {
  if (a.index() != b.index()) return false;
  if (const auto* la = std::get_if<Lexeme>(&a)) {
    const auto& lb = std::get<Lexeme>(b);
    if (!lemma_equal(la->lemma, lb.lemma)) return false;
    // A bare lemma matches any index of the same word; indices are only
    // compared when both sides committed to one.
    if (la->index && lb.index && *la->index != *lb.index) return false;
    return true;
  }
  if (const auto* ga = std::get_if<GrName>(&a)) {
    return ga->relation == std::get<GrName>(b).relation;
  }
  return true;  // Unspecified == Unspecified, Pro == Pro
}

bool is_valid_lemma(std::string_view lemma) {
  if (lemma.empty()) return false;
  if (lemma == "Pro") return false;
  for (char c : lemma) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == '(' || c == ')' || c == ',') return false;
  }
  return true;
}

Lexeme normalize_lexeme(std::string_view raw) {
  // Final whitespace-separated token, case-folded.
  size_t end = raw.find_last_not_of(" \t\r\n");
  if (end == std::string_view::npos) {
    throw std::invalid_argument("malformed lexeme: empty token sequence");
  }
  size_t begin = raw.find_last_of(" \t\r\n", end);
  begin = (begin == std::string_view::npos) ? 0 : begin + 1;
  std::string lemma(raw.substr(begin, end - begin + 1));
  for (char& c : lemma) c = ascii_lower(c);
  if (!is_valid_lemma(lemma)) {
    throw std::invalid_argument("malformed lexeme: '" + lemma + "'");
  }
  return Lexeme{lemma, std::nullopt};
}

GrInstance::GrInstance(Relation relation, std::vector<SlotValue> values)
    : relation_(relation), values_(std::move(values)) {
  auto sig = signature_of(relation);
  if (values_.size() != sig.size()) {
    std::ostringstream msg;
    msg << relation_name(relation) << " requires " << sig.size()
        << " slots, found " << values_.size();
    throw std::invalid_argument(msg.str());
  }
  for (size_t i = 0; i < sig.size(); ++i) {
    const SlotValue& v = values_[i];
    Slot s = sig[i];
    if (std::holds_alternative<Pro>(v) && s != Slot::kDependent) {
      throw std::invalid_argument(std::string("Pro not allowed in ") +
                                  std::string(slot_name(s)) + " slot");
    }
    if (std::holds_alternative<GrName>(v) && s != Slot::kInitialGr) {
      throw std::invalid_argument(
          std::string("relation name not allowed in ") +
          std::string(slot_name(s)) + " slot");
    }
    if (s == Slot::kHead && !std::holds_alternative<Lexeme>(v)) {
      throw std::invalid_argument("head slot requires a lexeme");
    }
    if (s == Slot::kInitialGr && std::holds_alternative<Lexeme>(v)) {
      throw std::invalid_argument(
          "initial_gr slot requires a relation name or '_'");
    }
    if (const auto* lex = std::get_if<Lexeme>(&v)) {
      if (!is_valid_lemma(lex->lemma)) {
        throw std::invalid_argument("malformed lexeme: '" + lex->lemma + "'");
      }
      if (lex->index && *lex->index < 1) {
        throw std::invalid_argument("token index must be positive");
      }
    }
  }
}

const SlotValue* GrInstance::slot(Slot s) const {
  int pos = slot_position(relation_, s);
  if (pos < 0) return nullptr;
  return &values_[pos];
}

std::string to_string(const SlotValue& v) {
  if (std::holds_alternative<Unspecified>(v)) return "_";
  if (std::holds_alternative<Pro>(v)) return "Pro";
  if (const auto* g = std::get_if<GrName>(&v)) {
    return std::string(relation_name(g->relation));
  }
  const auto& lex = std::get<Lexeme>(v);
  if (lex.index) return lex.lemma + ":" + std::to_string(*lex.index);
  return lex.lemma;
}

std::string to_string(const GrInstance& gr) {
  std::string out(relation_name(gr.relation()));
  out += '(';
  for (size_t i = 0; i < gr.values().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(gr.values()[i]);
  }
  out += ')';
  return out;
}

}  // namespace greval
