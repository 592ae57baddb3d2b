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

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "ascan/conllu.hpp"
#include "ascan/tagger.hpp"
#include "doctest.h"
#include "support/synthetic.hpp"

using namespace ascan;
using ascan::testing::conllu_block;

namespace {

std::vector<AscToken> tag(const std::string& text) {
  return Tagger().tag_document(parse_conllu(text, "t.conllu"));
}

std::string relation_base(const std::string& rel) {
  if (rel == "nsubj:pass" || rel == "aux:pass") return rel;
  return rel.substr(0, rel.find(':'));
}

std::multiset<std::string> relations_of(const Sentence& s, int id) {
  std::multiset<std::string> out;
  for (int d : s.dependents(id)) out.insert(relation_base(s.at(d).deprel));
  return out;
}

// Post-hoc check that the predicate carries what its frame needs.
bool frame_sound(const Sentence& s, const AscToken& t) {
  auto r = relations_of(s, t.verb_token_id);
  auto has = [&](const char* x) { return r.count(x) > 0; };
  switch (t.asc_type) {
    case AscType::kPassive: return has("nsubj:pass") && has("aux:pass");
    case AscType::kAttr: return has("nsubj") && has("cop");
    case AscType::kDitran: return has("nsubj") && has("iobj") && has("obj");
    case AscType::kCausMot: return has("nsubj") && has("obj") && has("obl");
    case AscType::kTranRes: return has("nsubj") && has("obj") && has("xcomp");
    case AscType::kTranS: return has("nsubj") && has("obj");
    case AscType::kIntranMot: return has("nsubj") && has("obl") && !has("obj");
    case AscType::kIntranRes: return has("nsubj") && has("advmod") && !has("obj") && !has("obl");
    case AscType::kIntranS:
      return has("nsubj") && !has("obj") && !has("iobj") && !has("obl") && !has("xcomp");
  }
  return false;
}

const std::string kGave = conllu_block({{"She", "she", "PRON", 2, "nsubj"},
                                        {"gave", "give", "VERB", 0, "root"},
                                        {"him", "he", "PRON", 2, "iobj"},
                                        {"a", "a", "DET", 5, "det"},
                                        {"book", "book", "NOUN", 2, "obj"}});
const std::string kBroken = conllu_block({{"The", "the", "DET", 2, "det"},
                                          {"window", "window", "NOUN", 4, "nsubj:pass"},
                                          {"was", "be", "AUX", 4, "aux:pass"},
                                          {"broken", "break", "VERB", 0, "root"}});

}  // namespace

TEST_CASE("tag names round-trip") {
  for (AscType t : kAllAscTypes) CHECK(asc_type_from_string(to_string(t)) == t);
  CHECK_FALSE(asc_type_from_string("TRANS"));
  CHECK(to_string(AscType::kIntranMot) == "INTRAN_MOT");
}

TEST_CASE("ditransitive") {
  auto tags = tag(kGave);
  REQUIRE(tags.size() == 1);
  CHECK(tags[0].asc_type == AscType::kDitran);
  CHECK(tags[0].verb_lemma == "give");
  CHECK(tags[0].verb_token_id == 2);
  CHECK(tags[0].source_id == "t.conllu");
}

TEST_CASE("passive") {
  auto tags = tag(kBroken);
  REQUIRE(tags.size() == 1);
  CHECK(tags[0].asc_type == AscType::kPassive);
  CHECK(tags[0].verb_lemma == "break");
}

TEST_CASE("attributive takes the copula lemma") {
  auto tags = tag(conllu_block({{"She", "she", "PRON", 3, "nsubj"},
                                {"is", "be", "AUX", 3, "cop"},
                                {"happy", "happy", "ADJ", 0, "root"}}));
  REQUIRE(tags.size() == 1);
  CHECK(tags[0].asc_type == AscType::kAttr);
  CHECK(tags[0].verb_lemma == "be");
  CHECK(tags[0].verb_token_id == 3);
}

TEST_CASE("no verb and no copula gives no tags") {
  CHECK(tag(conllu_block({{"Good", "good", "ADJ", 2, "amod"},
                          {"night", "night", "NOUN", 0, "root"}}))
            .empty());
}

TEST_CASE("document order and sentence indices") {
  CHECK(tag("").empty());
  auto two = tag(kGave + kGave);
  REQUIRE(two.size() == 2);
  CHECK(two[0].sentence_index == 0);
  CHECK(two[1].sentence_index == 1);
  CHECK(two[0].asc_type == two[1].asc_type);
  auto mixed = tag(kGave + kBroken);
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].asc_type == AscType::kDitran);
  CHECK(mixed[1].asc_type == AscType::kPassive);
}

TEST_CASE("embedded clauses are tagged in token order") {
  // "I think she left home": think root, left ccomp with its own subject.
  auto tags = tag(conllu_block({{"I", "I", "PRON", 2, "nsubj"},
                                {"think", "think", "VERB", 0, "root"},
                                {"she", "she", "PRON", 4, "nsubj"},
                                {"left", "leave", "VERB", 2, "ccomp"},
                                {"home", "home", "NOUN", 4, "obl"}}));
  REQUIRE(tags.size() == 2);
  CHECK(tags[0].verb_lemma == "think");
  CHECK(tags[0].asc_type == AscType::kIntranS);
  CHECK(tags[1].verb_lemma == "leave");
  CHECK(tags[1].asc_type == AscType::kIntranMot);
}

TEST_CASE("intransitive resultative needs a non-stoplisted adverb") {
  auto with = [](const std::string& adv, const std::string& upos) {
    return tag(conllu_block({{"it", "it", "PRON", 2, "nsubj"},
                             {"broke", "break", "VERB", 0, "root"},
                             {adv, adv, upos, 2, "advmod"}}));
  };
  REQUIRE(with("apart", "ADV").size() == 1);
  CHECK(with("apart", "ADV")[0].asc_type == AscType::kIntranRes);
  CHECK(with("never", "ADV")[0].asc_type == AscType::kIntranS);
  CHECK(with("Really", "ADV")[0].asc_type == AscType::kIntranS);
  CHECK(with("apart", "PART")[0].asc_type == AscType::kIntranS);

  TaggerConfig cfg;
  cfg.advmod_stoplist.insert("apart");
  auto doc = parse_conllu(conllu_block({{"it", "it", "PRON", 2, "nsubj"},
                                        {"broke", "break", "VERB", 0, "root"},
                                        {"apart", "apart", "ADV", 2, "advmod"}}),
                          "x");
  CHECK(Tagger(cfg).tag_document(doc)[0].asc_type == AscType::kIntranS);
}

TEST_CASE("subtyped relations fold to their base") {
  auto tags = tag(conllu_block({{"we", "we", "PRON", 2, "nsubj"},
                                {"left", "leave", "VERB", 0, "root"},
                                {"yesterday", "yesterday", "NOUN", 2, "obl:tmod"}}));
  REQUIRE(tags.size() == 1);
  CHECK(tags[0].asc_type == AscType::kIntranMot);

  // nsubj:outer counts as a subject, but nsubj:pass without aux:pass is not passive.
  auto outer = tag(conllu_block({{"we", "we", "PRON", 2, "nsubj:outer"},
                                 {"slept", "sleep", "VERB", 0, "root"}}));
  REQUIRE(outer.size() == 1);
  CHECK(outer[0].asc_type == AscType::kIntranS);
}

TEST_CASE("lemmas are lowercased; '_' falls back to the form") {
  auto tags = tag(conllu_block({{"We", "we", "PRON", 2, "nsubj"},
                                {"Ate", "EAT", "VERB", 0, "root"},
                                {"it", "it", "PRON", 2, "obj"}}) +
                  conllu_block({{"We", "we", "PRON", 2, "nsubj"},
                                {"Slept", "_", "VERB", 0, "root"}}));
  REQUIRE(tags.size() == 2);
  CHECK(tags[0].verb_lemma == "eat");
  CHECK(tags[1].verb_lemma == "slept");
}

TEST_CASE("fixture frames") {
  for (const char* name : {"frames.conllu", "distractors.conllu", "conj_shared_subject.conllu"}) {
    CAPTURE(name);
    std::string text =
        ascan::testing::read_file(std::string(ASCAN_FIXTURE_DIR) + "/frames/" + name);
    REQUIRE_FALSE(text.empty());
    auto expected = ascan::testing::read_expectations(text);
    Document doc = parse_conllu(text, name);
    REQUIRE(expected.size() == doc.sentences.size());
    Tagger tagger;
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
      auto tags = tagger.tag_sentence(doc.sentences[i], static_cast<int>(i));
      std::string got;
      for (const auto& t : tags) {
        if (!got.empty()) got += "; ";
        got += std::string(to_string(t.asc_type)) + " " + t.verb_lemma;
      }
      CAPTURE(i);
      CHECK(got == expected[i]);
    }
  }
}

TEST_CASE("properties over random documents") {
  std::mt19937_64 rng(11);
  Tagger tagger;
  for (int trial = 0; trial < 100; ++trial) {
    auto [text, plan] = ascan::testing::random_document(rng, 12);
    Document doc = parse_conllu(text, "r");
    auto tags = tagger.tag_document(doc);
    // Planned clauses come back exactly, distractors add nothing.
    REQUIRE(tags.size() == plan.size());
    for (std::size_t i = 0; i < tags.size(); ++i) {
      CHECK(tags[i].asc_type == plan[i].type);
      CHECK(tags[i].verb_lemma == plan[i].lemma);
    }
    std::set<std::pair<int, int>> predicates;
    for (const auto& t : tags) {
      CHECK(frame_sound(doc.sentences[t.sentence_index], t));
      CHECK(predicates.insert({t.sentence_index, t.verb_token_id}).second);
    }
    CHECK(tagger.tag_document(doc) == tags);
  }
}

TEST_CASE("debug stream format") {
  auto tags = tag(kGave + kBroken);
  std::ostringstream out;
  write_debug_tags(out, tags);
  CHECK(out.str() == "t.conllu\t0\t2\tDITRAN\tgive\nt.conllu\t1\t4\tPASSIVE\tbreak\n");
}
