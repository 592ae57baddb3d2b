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

#include "ascan/norms.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ascan/error.hpp"

namespace ascan {

// Defined in the generated bundled_norms.cpp.
extern const char* const kBundledDemoNorms;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::kNorms, "malformed norm file: " + what);
}

bool parse_count(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string header_value(const std::string& line, std::string_view key) {
  std::string prefix = "#" + std::string(key) + "=";
  if (line.rfind(prefix, 0) != 0) malformed("expected header line '" + prefix + "...'");
  return line.substr(prefix.size());
}

int major_version(std::string_view semver) {
  int major = -1;
  auto dot = semver.find('.');
  std::string_view head = semver.substr(0, dot);
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), major);
  if (ec != std::errc() || ptr != head.data() + head.size()) return -1;
  return major;
}

}  // namespace

NormTable::NormTable(std::map<PairKey, std::int64_t> pair_counts, std::string source,
                     std::string version)
    : pairs_(std::move(pair_counts)),
      source_(std::move(source)),
      version_(std::move(version)) {
  if (pairs_.empty()) throw Error(ErrorKind::kNorms, "empty norm table");
  if (source_.find_first_of("\r\n") != std::string::npos) {
    throw Error(ErrorKind::kInvalidArgument, "norm source label must be a single line");
  }
  for (const auto& [key, count] : pairs_) {
    if (count < 1) {
      throw Error(ErrorKind::kNorms, "inconsistent norm table: non-positive count for " +
                                         std::string(to_string(key.first)) + "/" + key.second);
    }
    if (key.second.empty() || key.second.find_first_of("\t\r\n") != std::string::npos) {
      throw Error(ErrorKind::kNorms, "inconsistent norm table: empty lemma or lemma with control characters");
    }
    types_[static_cast<std::size_t>(key.first)] += count;
    lemmas_[key.second] += count;
    total_ += count;
  }
}

std::int64_t NormTable::lemma_count(const std::string& lemma) const {
  auto it = lemmas_.find(lemma);
  return it == lemmas_.end() ? 0 : it->second;
}

std::int64_t NormTable::pair_count(AscType t, const std::string& lemma) const {
  auto it = pairs_.find(PairKey{t, lemma});
  return it == pairs_.end() ? 0 : it->second;
}

ContingencyCells NormTable::contingency(AscType t, const std::string& lemma) const {
  ContingencyCells cells;
  cells.a = pair_count(t, lemma);
  cells.b = lemma_count(lemma) - cells.a;
  cells.c_cell = type_count(t) - cells.a;
  cells.d = total_ - cells.a - cells.b - cells.c_cell;
  return cells;
}

void NormBuilder::add(const std::vector<AscToken>& tags) {
  for (const auto& t : tags) ++pairs_[{t.asc_type, t.verb_lemma}];
}

void NormBuilder::merge(const NormBuilder& other) {
  for (const auto& [key, count] : other.pairs_) pairs_[key] += count;
}

std::int64_t NormBuilder::total() const {
  std::int64_t n = 0;
  for (const auto& [key, count] : pairs_) n += count;
  return n;
}

NormTable NormBuilder::finish(std::string source) const {
  return NormTable(pairs_, std::move(source));
}

NormTable build_norms(const std::vector<Document>& documents, std::string label,
                      const Tagger& tagger) {
  NormBuilder builder;
  for (const auto& doc : documents) builder.add(tagger.tag_document(doc));
  return builder.finish(std::move(label));
}

void write_norms(std::ostream& out, const NormTable& norms) {
  out << "#source=" << norms.source() << '\n'
      << "#version=" << norms.version() << '\n'
      << "#total=" << norms.total() << '\n';
  for (const auto& [key, count] : norms.pair_counts()) {
    out << to_string(key.first) << '\t' << key.second << '\t' << count << '\n';
  }
}

NormTable read_norms(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.empty()) malformed("empty file");
  if (content.back() != '\n') malformed("truncated (last line is unterminated)");

  std::istringstream lines(content);
  std::string line;
  auto next = [&](const char* what) {
    if (!std::getline(lines, line)) malformed(std::string("missing ") + what);
    if (!line.empty() && line.back() == '\r') line.pop_back();
  };

  next("source header");
  std::string source = header_value(line, "source");
  next("version header");
  std::string version = header_value(line, "version");
  if (major_version(version) != major_version(kNormFormatVersion)) {
    throw Error(ErrorKind::kNorms, "norm file version mismatch: file has '" + version +
                                       "', reader supports " + kNormFormatVersion);
  }
  next("total header");
  std::int64_t declared_total = 0;
  if (!parse_count(header_value(line, "total"), declared_total)) malformed("bad #total value");

  std::map<NormTable::PairKey, std::int64_t> pairs;
  std::size_t row = 3;
  while (std::getline(lines, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      malformed("line " + std::to_string(row) + " does not have 3 columns");
    }
    auto type = asc_type_from_string(std::string_view(line).substr(0, t1));
    if (!type) malformed("line " + std::to_string(row) + ": unknown ASC type");
    std::string lemma = line.substr(t1 + 1, t2 - t1 - 1);
    std::int64_t count = 0;
    if (!parse_count(std::string_view(line).substr(t2 + 1), count)) {
      malformed("line " + std::to_string(row) + ": bad count");
    }
    NormTable::PairKey key{*type, lemma};
    if (!pairs.empty() && !(pairs.rbegin()->first < key)) {
      malformed("line " + std::to_string(row) + ": rows not sorted or duplicated");
    }
    pairs.emplace_hint(pairs.end(), std::move(key), count);
  }

  NormTable table(std::move(pairs), std::move(source), std::move(version));
  if (table.total() != declared_total) {
    throw Error(ErrorKind::kNorms,
                "inconsistent norm table: #total=" + std::to_string(declared_total) +
                    " but rows sum to " + std::to_string(table.total()));
  }
  return table;
}

void save_norms(const NormTable& norms, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  write_norms(out, norms);
  if (!out.flush()) throw Error(ErrorKind::kIo, "write failed: " + path.string());
}

NormTable load_norms(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open norm table " + path.string());
  return read_norms(in);
}

std::vector<std::string> bundled_norm_names() { return {"demo"}; }

NormTable resolve_norms(const std::string& selector) {
  if (selector.empty()) throw Error(ErrorKind::kInvalidArgument, "empty norm source");
  if (selector == "demo") {
    std::istringstream in(kBundledDemoNorms);
    return read_norms(in);
  }
  if (const char* dir = std::getenv("ASCAN_NORMS_DIR")) {
    auto candidate = std::filesystem::path(dir) / (selector + ".tsv");
    if (std::filesystem::is_regular_file(candidate)) return load_norms(candidate);
  }
  if (std::filesystem::is_regular_file(selector)) return load_norms(selector);
  throw Error(ErrorKind::kNorms,
              "unknown norm source '" + selector +
                  "': not a bundled table (demo), not found in $ASCAN_NORMS_DIR, "
                  "and not a readable file");
}

}  // namespace ascan
