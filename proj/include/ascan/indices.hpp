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

#ifndef ASCAN_INDICES_HPP_
#define ASCAN_INDICES_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ascan/conllu.hpp"
#include "ascan/norms.hpp"
#include "ascan/tagger.hpp"

namespace ascan {

using MaybeValue = std::optional<double>;

struct IndexConfig {
  int window = 11;
  int min_ref_freq = 5;
  std::set<std::string> be_lemmas = {"be"};

  // Throws Error(kInvalidArgument) unless window >= 2 and min_ref_freq >= 1.
  void validate() const;
};

// The 54 index names in canonical CSV order (without the leading filename).
const std::vector<std::string>& canonical_index_names();

// Always holds exactly the canonical names, in order. Absent values stay
// std::nullopt and are never folded into zero.
class IndexVector {
 public:
  IndexVector();

  MaybeValue get(const std::string& name) const;
  void set(const std::string& name, MaybeValue value);
  const std::vector<std::pair<std::string, MaybeValue>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  bool operator==(const IndexVector&) const = default;

 private:
  std::size_t slot(const std::string& name) const;
  std::vector<std::pair<std::string, MaybeValue>> entries_;
};

// Moving-average type-token ratio. Windows are visited left to right and
// the per-window ratios summed in that order, then divided by the window
// count. Missing unless seq.size() >= w + 1.
template <class Symbol>
MaybeValue mattr(std::span<const Symbol> seq, int w);

struct DiversityIndices {
  MaybeValue asc_mattr;
  MaybeValue asc_lemma_mattr;
  MaybeValue asc_lemma_mattr_no_be;
};
DiversityIndices diversity_indices(const std::vector<AscToken>& ascs, const IndexConfig& cfg);

// Prop_c = f_c / N_ASC for each type in canonical order; all missing when
// there are no tokens.
std::array<MaybeValue, kAscTypeCount> proportion_indices(const std::vector<AscToken>& ascs);

// Mean natural-log reference frequency over the tokens whose reference count
// is present and >= min_ref_freq. Missing when no token survives.
template <class Symbol>
MaybeValue frequency_index(std::span<const Symbol> tokens,
                           const std::function<std::int64_t(const Symbol&)>& lookup,
                           int min_ref_freq);

// Pointwise association scores from a 2x2 table. mutual_information and
// t_score are missing when a == 0. A delta-P fraction with a zero
// denominator contributes 0.
MaybeValue mutual_information(const ContingencyCells& cells);
MaybeValue t_score(const ContingencyCells& cells);
double delta_p_lemma(const ContingencyCells& cells);
double delta_p_structure(const ContingencyCells& cells);

struct SoaMeans {
  MaybeValue mi, t, dp_lemma, dp_structure;
};
struct SoaIndices {
  SoaMeans overall;
  std::array<SoaMeans, kAscTypeCount> by_type;
};
SoaIndices soa_indices(const std::vector<AscToken>& ascs, const NormTable& norms);

// Indices from an already tagged token list.
IndexVector compute_indices(const std::vector<AscToken>& ascs, const NormTable& norms,
                            const IndexConfig& cfg);
// Tags `doc` with `tagger`, then compute_indices.
IndexVector compute_all(const Document& doc, const NormTable& norms, const IndexConfig& cfg,
                        const Tagger& tagger = Tagger());

// ---------------------------------------------------------------------------

template <class Symbol>
MaybeValue mattr(std::span<const Symbol> seq, int w) {
  if (w < 2) return std::nullopt;
  const std::size_t n = seq.size();
  const std::size_t width = static_cast<std::size_t>(w);
  if (n < width + 1) return std::nullopt;

  // Intern symbols to dense ids so the sliding counter is a flat vector.
  std::map<Symbol, int> ids;
  std::vector<int> dense;
  dense.reserve(n);
  for (const auto& s : seq) {
    auto [it, inserted] = ids.emplace(s, static_cast<int>(ids.size()));
    dense.push_back(it->second);
  }
  std::vector<int> counts(ids.size(), 0);
  int distinct = 0;
  for (std::size_t i = 0; i < width; ++i) {
    if (counts[dense[i]]++ == 0) ++distinct;
  }
  const std::size_t windows = n - width + 1;
  double sum = static_cast<double>(distinct) / static_cast<double>(w);
  for (std::size_t i = 1; i < windows; ++i) {
    if (--counts[dense[i - 1]] == 0) --distinct;
    if (counts[dense[i + width - 1]]++ == 0) ++distinct;
    sum += static_cast<double>(distinct) / static_cast<double>(w);
  }
  return sum / static_cast<double>(windows);
}

template <class Symbol>
MaybeValue frequency_index(std::span<const Symbol> tokens,
                           const std::function<std::int64_t(const Symbol&)>& lookup,
                           int min_ref_freq) {
  double sum = 0.0;
  std::size_t matched = 0;
  for (const auto& t : tokens) {
    std::int64_t f = lookup(t);
    if (f < 1 || f < min_ref_freq) continue;
    sum += std::log(static_cast<double>(f));
    ++matched;
  }
  if (matched == 0) return std::nullopt;
  return sum / static_cast<double>(matched);
}

}  // namespace ascan

#endif  // ASCAN_INDICES_HPP_
