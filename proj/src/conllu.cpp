/* Copyright 2026 The ASC Analyzer Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "ascan/conllu.hpp"

#include <charconv>
#include <sstream>

#include "ascan/error.hpp"

namespace ascan {

namespace {

constexpr int kColumns = 10;

[[noreturn]] void line_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::kParse,
              "malformed token line " + std::to_string(line_no) + ": " + what);
}

[[noreturn]] void tree_error(int index, const std::string& what) {
  throw Error(ErrorKind::kParse,
              "invalid sentence " + std::to_string(index) + ": " + what);
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

}  // namespace

Sentence::Sentence(std::vector<Token> tokens, int index)
    : tokens_(std::move(tokens)), children_(tokens_.size() + 1) {
  const int n = static_cast<int>(tokens_.size());
  if (n == 0) tree_error(index, "no tokens");
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = tokens_[i];
    if (t.id != i + 1) {
      tree_error(index, "token ids must be consecutive from 1 (found " +
                            std::to_string(t.id) + " at position " +
                            std::to_string(i + 1) + ")");
    }
    if (t.head < 0 || t.head > n) {
      tree_error(index, "head " + std::to_string(t.head) + " of token " +
                            std::to_string(t.id) + " is out of range");
    }
    if (t.head == t.id) {
      tree_error(index, "token " + std::to_string(t.id) + " heads itself");
    }
    if (t.head == 0) ++roots;
    children_[t.head].push_back(t.id);
  }
  if (roots != 1) {
    tree_error(index, roots == 0 ? "headless sentence (no root)"
                                 : "more than one root");
  }
  // Every token must reach the root; walk up at most n steps.
  for (const Token& t : tokens_) {
    int cur = t.id;
    int steps = 0;
    while (cur != 0) {
      cur = tokens_[cur - 1].head;
      if (++steps > n) tree_error(index, "cycle through token " + std::to_string(t.id));
    }
  }
}

std::size_t Document::token_count() const {
  std::size_t total = 0;
  for (const auto& s : sentences) total += s.size();
  return total;
}

Document parse_conllu(std::istream& in, std::string source_id) {
  Document doc;
  doc.source_id = std::move(source_id);

  std::vector<Token> pending;
  std::size_t line_no = 0;
  bool in_block = false;  // saw any line of the current sentence block

  auto flush = [&] {
    if (!pending.empty()) {
      int index = static_cast<int>(doc.sentences.size());
      doc.sentences.emplace_back(std::move(pending), index);
    }
    pending.clear();
    in_block = false;
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      flush();
      continue;
    }
    in_block = true;
    if (line.front() == '#') continue;

    auto fields = split_tabs(line);
    if (fields.size() != kColumns) {
      line_error(line_no, "expected " + std::to_string(kColumns) +
                              " tab-separated columns, found " +
                              std::to_string(fields.size()));
    }
    std::string_view id_field = fields[0];
    if (id_field.find('-') != std::string_view::npos ||
        id_field.find('.') != std::string_view::npos) {
      continue;  // multiword range or empty node
    }
    Token t;
    if (!parse_int(id_field, t.id) || t.id < 1) {
      line_error(line_no, "non-integer or non-positive id '" +
                              std::string(id_field) + "'");
    }
    if (!parse_int(fields[6], t.head) || t.head < 0) {
      line_error(line_no, "non-integer head '" + std::string(fields[6]) + "'");
    }
    t.form = fields[1];
    t.lemma = fields[2];
    t.upos = fields[3];
    t.deprel = fields[7];
    pending.push_back(std::move(t));
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read error in " + doc.source_id);
  if (in_block) flush();
  return doc;
}

Document parse_conllu(std::string_view text, std::string source_id) {
  std::istringstream in{std::string(text)};
  return parse_conllu(in, std::move(source_id));
}

}  // namespace ascan
