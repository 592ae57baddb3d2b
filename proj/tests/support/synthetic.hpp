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

// Test-only generators and oracles. Nothing here calls into the code under
// test except for type names and enum values.

#ifndef ASCAN_TESTS_SYNTHETIC_HPP_
#define ASCAN_TESTS_SYNTHETIC_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ascan/tagger.hpp"

namespace ascan::testing {

struct Row {
  std::string form, lemma, upos;
  int head;
  std::string deprel;
};

inline std::string conllu_block(const std::vector<Row>& rows, const std::string& comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    out << (i + 1) << '\t' << r.form << '\t' << r.lemma << '\t' << r.upos << "\t_\t_\t" << r.head
        << '\t' << r.deprel << "\t_\t_\n";
  }
  out << "\n";
  return out.str();
}

// A single-clause sentence instantiating `type` with main predicate lemma
// `lemma` (for ATTR, the copula lemma). The frame is written out by hand per
// construction, independently of the tagger's rule table.
inline std::string clause(AscType type, const std::string& lemma) {
  const std::string& v = lemma;
  switch (type) {
    case AscType::kAttr:
      return conllu_block({{"she", "she", "PRON", 3, "nsubj"}, {v, v, "AUX", 3, "cop"},
                           {"ready", "ready", "ADJ", 0, "root"}, {".", ".", "PUNCT", 3, "punct"}});
    case AscType::kCausMot:
      return conllu_block({{"he", "he", "PRON", 2, "nsubj"}, {v, v, "VERB", 0, "root"},
                           {"it", "it", "PRON", 2, "obj"}, {"to", "to", "ADP", 5, "case"},
                           {"school", "school", "NOUN", 2, "obl"}});
    case AscType::kDitran:
      return conllu_block({{"we", "we", "PRON", 2, "nsubj"}, {v, v, "VERB", 0, "root"},
                           {"them", "they", "PRON", 2, "iobj"}, {"tea", "tea", "NOUN", 2, "obj"}});
    case AscType::kIntranMot:
      return conllu_block({{"they", "they", "PRON", 2, "nsubj"}, {v, v, "VERB", 0, "root"},
                           {"to", "to", "ADP", 4, "case"}, {"town", "town", "NOUN", 2, "obl"}});
    case AscType::kIntranRes:
      return conllu_block({{"it", "it", "PRON", 2, "nsubj"}, {v, v, "VERB", 0, "root"},
                           {"apart", "apart", "ADV", 2, "advmod"}});
    case AscType::kIntranS:
      return conllu_block({{"I", "I", "PRON", 2, "nsubj"}, {v, v, "VERB", 0, "root"},
                           {".", ".", "PUNCT", 2, "punct"}});
    case AscType::kPassive:
      return conllu_block({{"it", "it", "PRON", 3, "nsubj:pass"}, {"was", "be", "AUX", 3, "aux:pass"},
                           {v, v, "VERB", 0, "root"}});
    case AscType::kTranS:
      return conllu_block({{"you", "you", "PRON", 2, "nsubj"}, {v, v, "VERB", 0, "root"},
                           {"bread", "bread", "NOUN", 2, "obj"}});
    case AscType::kTranRes:
      return conllu_block({{"she", "she", "PRON", 2, "nsubj"}, {v, v, "VERB", 0, "root"},
                           {"it", "it", "PRON", 2, "obj"}, {"flat", "flat", "ADJ", 2, "xcomp"}});
  }
  return {};
}

// A sentence with no qualifying predicate.
inline std::string distractor(int variant) {
  switch (variant % 3) {
    case 0:
      return conllu_block({{"Close", "close", "VERB", 0, "root"}, {"it", "it", "PRON", 1, "obj"}});
    case 1:
      return conllu_block({{"Good", "good", "ADJ", 2, "amod"}, {"morning", "morning", "NOUN", 0, "root"}});
    default:
      return conllu_block({{"Sit", "sit", "VERB", 0, "root"}, {"and", "and", "CCONJ", 3, "cc"},
                           {"wait", "wait", "VERB", 1, "conj"}});
  }
}

inline const std::vector<std::string>& lemma_pool() {
  static const std::vector<std::string> pool = {"make", "take", "give", "go", "see", "put",
                                                "run", "tell", "break", "have", "eat", "send"};
  return pool;
}

struct PlannedToken {
  AscType type;
  std::string lemma;
  bool operator<(const PlannedToken& o) const {
    return std::tie(type, lemma) < std::tie(o.type, o.lemma);
  }
};

// Random document: `sentences` sentences, each either a planned clause or a
// distractor. Returns CoNLL-U text plus the planned clause sequence.
inline std::pair<std::string, std::vector<PlannedToken>> random_document(std::mt19937_64& rng,
                                                                         int sentences) {
  std::string text;
  std::vector<PlannedToken> plan;
  std::uniform_int_distribution<int> type_pick(0, static_cast<int>(kAscTypeCount) - 1);
  std::uniform_int_distribution<std::size_t> lemma_pick(0, lemma_pool().size() - 1);
  std::bernoulli_distribution is_distractor(0.15);
  for (int s = 0; s < sentences; ++s) {
    if (is_distractor(rng)) {
      text += distractor(static_cast<int>(rng() % 3));
      continue;
    }
    auto type = static_cast<AscType>(type_pick(rng));
    std::string lemma = type == AscType::kAttr ? "be" : lemma_pool()[lemma_pick(rng)];
    text += clause(type, lemma);
    plan.push_back({type, lemma});
  }
  return {text, plan};
}

// Parses the tagger debug stream and recounts (type, lemma) pairs.
inline std::map<std::pair<std::string, std::string>, std::int64_t> recount_debug_stream(
    const std::string& stream) {
  std::map<std::pair<std::string, std::string>, std::int64_t> counts;
  std::istringstream in(stream);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) f.push_back(cell);
    if (f.size() == 5) ++counts[{f[3], f[4]}];
  }
  return counts;
}

// Brute-force MATTR: rebuild a type set for every window.
template <class T>
std::optional<double> naive_mattr(const std::vector<T>& seq, int w) {
  const std::size_t n = seq.size();
  if (n < static_cast<std::size_t>(w) + 1) return std::nullopt;
  const std::size_t windows = n - static_cast<std::size_t>(w) + 1;
  double sum = 0.0;
  for (std::size_t i = 0; i < windows; ++i) {
    std::set<T> types(seq.begin() + static_cast<std::ptrdiff_t>(i),
                      seq.begin() + static_cast<std::ptrdiff_t>(i) + w);
    sum += static_cast<double>(types.size()) / static_cast<double>(w);
  }
  return sum / static_cast<double>(windows);
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// The "# expect = TYPE lemma" comment of every sentence, in order. An empty
// value means the sentence should produce no tag.
inline std::vector<std::string> read_expectations(const std::string& conllu) {
  std::vector<std::string> out;
  std::istringstream in(conllu);
  std::string line;
  const std::string key = "# expect =";
  while (std::getline(in, line)) {
    if (line.rfind(key, 0) != 0) continue;
    std::string v = line.substr(key.size());
    while (!v.empty() && (v.front() == ' ')) v.erase(v.begin());
    while (!v.empty() && (v.back() == ' ' || v.back() == '\r')) v.pop_back();
    out.push_back(v);
  }
  return out;
}

// Fresh, empty scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("ascan_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace ascan::testing

#endif  // ASCAN_TESTS_SYNTHETIC_HPP_
