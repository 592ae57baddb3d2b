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

#include "ascan/indices.hpp"

#include <algorithm>
#include <stdexcept>

#include "ascan/error.hpp"

namespace ascan {

namespace {

using Pair = std::pair<AscType, std::string>;

std::vector<std::string> make_canonical_names() {
  std::vector<std::string> names = {"ascMATTR", "ascLemmaMATTR", "ascLemmaMATTRNoBe"};
  for (AscType t : kAllAscTypes) names.push_back(std::string(to_string(t)) + "_Prop");
  names.insert(names.end(), {"ascAvFreq", "ascLemmaAvFreq", "ascAvMI", "ascAvT",
                             "ascAvDeltaPLemma", "ascAvDeltaPStructure"});
  for (AscType t : kAllAscTypes) {
    std::string tag(to_string(t));
    for (const char* metric : {"_AvMI", "_AvT", "_AvDeltaPLemma", "_AvDeltaPStructure"}) {
      names.push_back(tag + metric);
    }
  }
  return names;
}

// a*N == (a+b)(a+c) evaluated without rounding.
bool independent(const ContingencyCells& x) {
  using Wide = __int128;
  return static_cast<Wide>(x.a) * x.total() ==
         static_cast<Wide>(x.a + x.b) * static_cast<Wide>(x.a + x.c_cell);
}

double expected(const ContingencyCells& x) {
  return static_cast<double>(x.a + x.b) * static_cast<double>(x.a + x.c_cell) /
         static_cast<double>(x.total());
}

double safe_ratio(std::int64_t num, std::int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

struct Mean {
  double sum = 0.0;
  std::size_t n = 0;
  void add(MaybeValue v) {
    if (!v) return;
    sum += *v;
    ++n;
  }
  MaybeValue value() const {
    if (n == 0) return std::nullopt;
    return sum / static_cast<double>(n);
  }
};

struct MeanSet {
  Mean mi, t, dp_lemma, dp_structure;
  SoaMeans value() const {
    return {mi.value(), t.value(), dp_lemma.value(), dp_structure.value()};
  }
};

}  // namespace

void IndexConfig::validate() const {
  if (window < 2) {
    throw Error(ErrorKind::kInvalidArgument, "window must be >= 2, got " + std::to_string(window));
  }
  if (min_ref_freq < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "min_ref_freq must be >= 1, got " + std::to_string(min_ref_freq));
  }
}

const std::vector<std::string>& canonical_index_names() {
  static const std::vector<std::string> names = make_canonical_names();
  return names;
}

IndexVector::IndexVector() {
  for (const auto& name : canonical_index_names()) entries_.emplace_back(name, std::nullopt);
}

std::size_t IndexVector::slot(const std::string& name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first == name) return i;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown index name '" + name + "'");
}

MaybeValue IndexVector::get(const std::string& name) const { return entries_[slot(name)].second; }

void IndexVector::set(const std::string& name, MaybeValue value) {
  entries_[slot(name)].second = value;
}

DiversityIndices diversity_indices(const std::vector<AscToken>& ascs, const IndexConfig& cfg) {
  std::vector<AscType> types;
  std::vector<Pair> pairs;
  std::vector<Pair> pairs_no_be;
  for (const auto& t : ascs) {
    types.push_back(t.asc_type);
    pairs.emplace_back(t.asc_type, t.verb_lemma);
    if (!cfg.be_lemmas.contains(t.verb_lemma)) pairs_no_be.emplace_back(t.asc_type, t.verb_lemma);
  }
  return {
      mattr(std::span<const AscType>(types), cfg.window),
      mattr(std::span<const Pair>(pairs), cfg.window),
      mattr(std::span<const Pair>(pairs_no_be), cfg.window),
  };
}

std::array<MaybeValue, kAscTypeCount> proportion_indices(const std::vector<AscToken>& ascs) {
  std::array<MaybeValue, kAscTypeCount> out{};
  if (ascs.empty()) return out;
  std::array<std::size_t, kAscTypeCount> counts{};
  for (const auto& t : ascs) ++counts[static_cast<std::size_t>(t.asc_type)];
  for (std::size_t i = 0; i < kAscTypeCount; ++i) {
    out[i] = static_cast<double>(counts[i]) / static_cast<double>(ascs.size());
  }
  return out;
}

MaybeValue mutual_information(const ContingencyCells& cells) {
  if (cells.a <= 0) return std::nullopt;
  if (independent(cells)) return 0.0;
  return std::log2(static_cast<double>(cells.a) / expected(cells));
}

MaybeValue t_score(const ContingencyCells& cells) {
  if (cells.a <= 0) return std::nullopt;
  if (independent(cells)) return 0.0;
  double a = static_cast<double>(cells.a);
  return (a - expected(cells)) / std::sqrt(a);
}

double delta_p_lemma(const ContingencyCells& x) {
  return safe_ratio(x.a, x.a + x.b) - safe_ratio(x.c_cell, x.c_cell + x.d);
}

double delta_p_structure(const ContingencyCells& x) {
  return safe_ratio(x.a, x.a + x.c_cell) - safe_ratio(x.b, x.b + x.d);
}

SoaIndices soa_indices(const std::vector<AscToken>& ascs, const NormTable& norms) {
  MeanSet overall;
  std::array<MeanSet, kAscTypeCount> by_type;
  for (const auto& tok : ascs) {
    ContingencyCells cells = norms.contingency(tok.asc_type, tok.verb_lemma);
    MaybeValue mi = mutual_information(cells);
    MaybeValue t = t_score(cells);
    double dpl = delta_p_lemma(cells);
    double dps = delta_p_structure(cells);
    for (MeanSet* m : {&overall, &by_type[static_cast<std::size_t>(tok.asc_type)]}) {
      m->mi.add(mi);
      m->t.add(t);
      m->dp_lemma.add(dpl);
      m->dp_structure.add(dps);
    }
  }
  SoaIndices out;
  out.overall = overall.value();
  for (std::size_t i = 0; i < kAscTypeCount; ++i) out.by_type[i] = by_type[i].value();
  return out;
}

IndexVector compute_indices(const std::vector<AscToken>& ascs, const NormTable& norms,
                            const IndexConfig& cfg) {
  cfg.validate();
  IndexVector v;

  DiversityIndices div = diversity_indices(ascs, cfg);
  v.set("ascMATTR", div.asc_mattr);
  v.set("ascLemmaMATTR", div.asc_lemma_mattr);
  v.set("ascLemmaMATTRNoBe", div.asc_lemma_mattr_no_be);

  auto props = proportion_indices(ascs);
  for (AscType t : kAllAscTypes) {
    v.set(std::string(to_string(t)) + "_Prop", props[static_cast<std::size_t>(t)]);
  }

  std::vector<AscType> types;
  std::vector<Pair> pairs;
  for (const auto& t : ascs) {
    types.push_back(t.asc_type);
    pairs.emplace_back(t.asc_type, t.verb_lemma);
  }
  v.set("ascAvFreq", frequency_index<AscType>(
                         types, [&](const AscType& t) { return norms.type_count(t); },
                         cfg.min_ref_freq));
  v.set("ascLemmaAvFreq",
        frequency_index<Pair>(
            pairs, [&](const Pair& p) { return norms.pair_count(p.first, p.second); },
            cfg.min_ref_freq));

  SoaIndices soa = soa_indices(ascs, norms);
  v.set("ascAvMI", soa.overall.mi);
  v.set("ascAvT", soa.overall.t);
  v.set("ascAvDeltaPLemma", soa.overall.dp_lemma);
  v.set("ascAvDeltaPStructure", soa.overall.dp_structure);
  for (AscType t : kAllAscTypes) {
    const SoaMeans& m = soa.by_type[static_cast<std::size_t>(t)];
    std::string tag(to_string(t));
    v.set(tag + "_AvMI", m.mi);
    v.set(tag + "_AvT", m.t);
    v.set(tag + "_AvDeltaPLemma", m.dp_lemma);
    v.set(tag + "_AvDeltaPStructure", m.dp_structure);
  }
  return v;
}

IndexVector compute_all(const Document& doc, const NormTable& norms, const IndexConfig& cfg,
                        const Tagger& tagger) {
  return compute_indices(tagger.tag_document(doc), norms, cfg);
}

}  // namespace ascan
