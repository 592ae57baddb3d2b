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

#include "ascan/tagger.hpp"

#include <algorithm>
#include <cctype>

namespace ascan {

namespace {

constexpr std::array<std::string_view, kAscTypeCount> kTagNames = {
    "ATTR",      "CAUS_MOT", "DITRAN",   "INTRAN_MOT", "INTRAN_RES",
    "INTRAN_S",  "PASSIVE",  "TRAN_RES", "TRAN_S",
};

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Relation class after subtype folding. nsubj:pass and aux:pass are kept
// distinct; every other "rel:sub" collapses to "rel".
std::string_view relation_class(std::string_view deprel) {
  if (deprel == "nsubj:pass" || deprel == "aux:pass") return deprel;
  return deprel.substr(0, deprel.find(':'));
}

struct Frame {
  bool nsubj = false;
  bool nsubj_pass = false;
  bool aux_pass = false;
  bool cop = false;
  bool obj = false;
  bool iobj = false;
  bool obl = false;
  bool xcomp = false;
  bool result_advmod = false;
  int first_cop = 0;
};

Frame collect_frame(const Sentence& s, int id, const TaggerConfig& cfg) {
  Frame f;
  for (int dep : s.dependents(id)) {
    const Token& t = s.at(dep);
    std::string_view rel = relation_class(t.deprel);
    if (rel == "nsubj") f.nsubj = true;
    else if (rel == "nsubj:pass") f.nsubj_pass = true;
    else if (rel == "aux:pass") f.aux_pass = true;
    else if (rel == "cop") {
      if (!f.cop) f.first_cop = dep;
      f.cop = true;
    } else if (rel == "obj") f.obj = true;
    else if (rel == "iobj") f.iobj = true;
    else if (rel == "obl") f.obl = true;
    else if (rel == "xcomp") f.xcomp = true;
    else if (rel == "advmod" && t.upos == "ADV" &&
             !cfg.advmod_stoplist.contains(lowercase(t.lemma))) {
      f.result_advmod = true;
    }
  }
  return f;
}

std::optional<AscType> classify(const Frame& f) {
  if (f.nsubj_pass && f.aux_pass) return AscType::kPassive;
  if (!f.nsubj) return std::nullopt;
  if (f.cop) return AscType::kAttr;
  if (f.iobj && f.obj) return AscType::kDitran;
  if (f.obj && f.obl) return AscType::kCausMot;
  if (f.obj && f.xcomp) return AscType::kTranRes;
  if (f.obj) return AscType::kTranS;
  if (f.obl) return AscType::kIntranMot;
  if (f.result_advmod) return AscType::kIntranRes;
  if (!f.iobj && !f.xcomp) return AscType::kIntranS;
  return std::nullopt;
}

// "_" is the CoNLL-U placeholder for an unannotated lemma.
std::string lemma_of(const Token& t) {
  if (!t.lemma.empty() && t.lemma != "_") return lowercase(t.lemma);
  return lowercase(t.form);
}

}  // namespace

std::string_view to_string(AscType t) {
  return kTagNames[static_cast<std::size_t>(t)];
}

std::optional<AscType> asc_type_from_string(std::string_view tag) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == tag) return static_cast<AscType>(i);
  }
  return std::nullopt;
}

std::vector<AscToken> Tagger::tag_sentence(const Sentence& sentence,
                                           int sentence_index,
                                           const std::string& source_id) const {
  std::vector<AscToken> out;
  for (const Token& t : sentence.tokens()) {
    Frame f = collect_frame(sentence, t.id, config_);
    if (t.upos != "VERB" && !f.cop) continue;
    auto type = classify(f);
    if (!type) continue;
    std::string lemma = *type == AscType::kAttr
                            ? lemma_of(sentence.at(f.first_cop))
                            : lemma_of(t);
    if (lemma.empty()) continue;
    out.push_back(AscToken{*type, t.id, std::move(lemma), sentence_index, source_id});
  }
  return out;
}

std::vector<AscToken> Tagger::tag_document(const Document& doc) const {
  std::vector<AscToken> out;
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    auto tags = tag_sentence(doc.sentences[i], static_cast<int>(i), doc.source_id);
    std::move(tags.begin(), tags.end(), std::back_inserter(out));
  }
  return out;
}

void write_debug_tags(std::ostream& out, const std::vector<AscToken>& tags) {
  for (const auto& t : tags) {
    out << t.source_id << '\t' << t.sentence_index << '\t' << t.verb_token_id
        << '\t' << to_string(t.asc_type) << '\t' << t.verb_lemma << '\n';
  }
}

}  // namespace ascan
