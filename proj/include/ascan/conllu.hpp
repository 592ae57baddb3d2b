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

#ifndef ASCAN_CONLLU_HPP_
#define ASCAN_CONLLU_HPP_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace ascan {

// One syntactic word of a CoNLL-U sentence. Only the six columns the tagger
// needs are kept; FEATS, XPOS, DEPS and MISC are dropped on read.
struct Token {
  int id = 0;    // 1-based position in the sentence
  std::string form;
  std::string lemma;
  std::string upos;
  int head = 0;  // 0 = root
  std::string deprel;

  bool operator==(const Token&) const = default;
};

// A dependency tree. Token i (0-based) always has id i + 1.
class Sentence {
 public:
  Sentence() = default;
  // Validates the tree: consecutive ids, one root, heads in range, no cycles.
  // Throws ascan::Error (kParse) with a message naming `index`.
  Sentence(std::vector<Token> tokens, int index);

  const std::vector<Token>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  const Token& at(int id) const { return tokens_.at(id - 1); }

  // Ids of the direct dependents of `id`, in id order.
  const std::vector<int>& dependents(int id) const { return children_.at(id); }

  bool operator==(const Sentence& o) const { return tokens_ == o.tokens_; }

 private:
  std::vector<Token> tokens_;
  std::vector<std::vector<int>> children_;  // indexed by id; [0] = root(s)
};

struct Document {
  std::string source_id;
  std::vector<Sentence> sentences;

  std::size_t token_count() const;
  bool operator==(const Document&) const = default;
};

// Reads a CoNLL-U stream. Multiword-token ranges ("3-4") and empty nodes
// ("3.1") are skipped. Both LF and CRLF line endings are accepted.
//
// Throws ascan::Error(kParse) on a malformed token line (message names the
// 1-based line number) or on an invalid tree (message names the 0-based
// sentence index).
Document parse_conllu(std::istream& in, std::string source_id);
Document parse_conllu(std::string_view text, std::string source_id);

}  // namespace ascan

#endif  // ASCAN_CONLLU_HPP_
