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

#ifndef ASCAN_TAGGER_HPP_
#define ASCAN_TAGGER_HPP_

#include <array>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ascan/conllu.hpp"

namespace ascan {

// The nine argument structure constructions, in alphabetical tag order.
// The numeric order is the canonical column order everywhere.
enum class AscType {
  kAttr,
  kCausMot,
  kDitran,
  kIntranMot,
  kIntranRes,
  kIntranS,
  kPassive,
  kTranRes,
  kTranS,
};

inline constexpr std::size_t kAscTypeCount = 9;

inline constexpr std::array<AscType, kAscTypeCount> kAllAscTypes = {
    AscType::kAttr,      AscType::kCausMot, AscType::kDitran,
    AscType::kIntranMot, AscType::kIntranRes, AscType::kIntranS,
    AscType::kPassive,   AscType::kTranRes, AscType::kTranS,
};

std::string_view to_string(AscType t);
std::optional<AscType> asc_type_from_string(std::string_view tag);

struct AscToken {
  AscType asc_type;
  int verb_token_id;
  std::string verb_lemma;  // lowercased; the copula's lemma for ATTR
  int sentence_index;
  std::string source_id;

  bool operator==(const AscToken&) const = default;
};

struct TaggerConfig {
  // advmod dependents with these lemmas never license INTRAN_RES.
  std::set<std::string> advmod_stoplist = {
      "not", "n't", "very", "too",  "so",     "just",  "also",  "then",
      "now", "here", "there", "always", "never", "often", "really"};
};

// Deterministic rule tagger. A predicate is a VERB token or any token with a
// cop dependent, and it must have an nsubj or nsubj:pass dependent. The first
// matching frame wins, in this order:
//
//   PASSIVE     nsubj:pass + aux:pass
//   ATTR        nsubj + cop
//   DITRAN      nsubj + iobj + obj
//   CAUS_MOT    nsubj + obj + obl
//   TRAN_RES    nsubj + obj + xcomp
//   TRAN_S      nsubj + obj
//   INTRAN_MOT  nsubj + obl
//   INTRAN_RES  nsubj + qualifying advmod (ADV, not stoplisted)
//   INTRAN_S    nsubj, and no iobj/xcomp
//
// Subtyped relations match on the part before ':' except nsubj:pass and
// aux:pass, which match exactly.
class Tagger {
 public:
  Tagger() = default;
  explicit Tagger(TaggerConfig config) : config_(std::move(config)) {}

  std::vector<AscToken> tag_sentence(const Sentence& sentence,
                                     int sentence_index = 0,
                                     const std::string& source_id = {}) const;
  std::vector<AscToken> tag_document(const Document& doc) const;

  const TaggerConfig& config() const { return config_; }

 private:
  TaggerConfig config_;
};

// One tab-separated line per token:
// source_id, sentence_index, verb_token_id, asc_type, verb_lemma.
void write_debug_tags(std::ostream& out, const std::vector<AscToken>& tags);

}  // namespace ascan

#endif  // ASCAN_TAGGER_HPP_
