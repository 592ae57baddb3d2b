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

#ifndef ASCAN_NORMS_HPP_
#define ASCAN_NORMS_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ascan/conllu.hpp"
#include "ascan/tagger.hpp"

namespace ascan {

inline constexpr const char* kNormFormatVersion = "1.0.0";

// The 2x2 table for one (construction, lemma) pair against a reference corpus.
//
//                 lemma v    other lemmas
//   type c          a            c_cell
//   other types     b            d
struct ContingencyCells {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c_cell = 0;
  std::int64_t d = 0;

  std::int64_t total() const { return a + b + c_cell + d; }
  bool operator==(const ContingencyCells&) const = default;
};

// Reference-corpus counts. Marginals are always derived from the pair counts,
// so the table is consistent by construction; it is immutable once built.
class NormTable {
 public:
  using PairKey = std::pair<AscType, std::string>;

  NormTable() = default;
  // Throws Error(kNorms) if any count is < 1 or the table is empty.
  NormTable(std::map<PairKey, std::int64_t> pair_counts, std::string source,
            std::string version = kNormFormatVersion);

  const std::map<PairKey, std::int64_t>& pair_counts() const { return pairs_; }
  const std::map<std::string, std::int64_t>& lemma_counts() const { return lemmas_; }
  std::int64_t type_count(AscType t) const { return types_[static_cast<std::size_t>(t)]; }
  std::int64_t lemma_count(const std::string& lemma) const;
  std::int64_t pair_count(AscType t, const std::string& lemma) const;
  std::int64_t total() const { return total_; }
  const std::string& source() const { return source_; }
  const std::string& version() const { return version_; }

  ContingencyCells contingency(AscType t, const std::string& lemma) const;

  // Field-for-field equality, metadata included.
  bool operator==(const NormTable&) const = default;

 private:
  std::map<PairKey, std::int64_t> pairs_;
  std::array<std::int64_t, kAscTypeCount> types_{};
  std::map<std::string, std::int64_t> lemmas_;
  std::int64_t total_ = 0;
  std::string source_;
  std::string version_;
};

// Incremental counter; tag documents one at a time and merge in any order.
class NormBuilder {
 public:
  void add(const std::vector<AscToken>& tags);
  void merge(const NormBuilder& other);
  std::int64_t total() const;
  // Throws Error(kNorms, "empty norm table") when nothing was counted.
  NormTable finish(std::string source) const;

 private:
  std::map<NormTable::PairKey, std::int64_t> pairs_;
};

NormTable build_norms(const std::vector<Document>& documents, std::string label,
                      const Tagger& tagger = Tagger());

// TSV persistence:
//   #source=<label>
//   #version=<semver>
//   #total=<N>
//   <ASC_TYPE>\t<lemma>\t<count>     (sorted by type, then lemma)
void write_norms(std::ostream& out, const NormTable& norms);
NormTable read_norms(std::istream& in);
void save_norms(const NormTable& norms, const std::filesystem::path& path);
NormTable load_norms(const std::filesystem::path& path);

// Built-in tables addressable by name (e.g. "demo").
std::vector<std::string> bundled_norm_names();
// Resolves a --source selector: a bundled name, a name found as
// "<name>.tsv" under $ASCAN_NORMS_DIR, or a path to a TSV file.
NormTable resolve_norms(const std::string& selector);

}  // namespace ascan

#endif  // ASCAN_NORMS_HPP_
