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

#ifndef ASCAN_PIPELINE_HPP_
#define ASCAN_PIPELINE_HPP_

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ascan/csv.hpp"
#include "ascan/indices.hpp"
#include "ascan/norms.hpp"
#include "ascan/stats.hpp"

namespace ascan {

using WarningSink = std::function<void(const std::string&)>;

// A discovered input file and its name as written to the CSV.
struct InputFile {
  std::filesystem::path path;
  std::string name;  // path relative to the input directory, '/'-separated
};

// *.conllu files under `dir`, sorted bytewise by relative name.
std::vector<InputFile> discover_conllu(const std::filesystem::path& dir, bool recursive);

// CSV cell text: empty for missing, otherwise %.6g.
std::string format_value(MaybeValue v);
std::string csv_header();
std::string csv_row(const std::string& filename, const IndexVector& v);

struct AnalyzeOptions {
  std::filesystem::path input_dir;
  std::filesystem::path output_csv;
  std::string source;
  IndexConfig index;
  bool recursive = false;
  int jobs = 1;
  // Tagger debug stream destination; "-" writes to stdout.
  std::optional<std::string> debug_tags;
};

struct AnalyzeSummary {
  std::size_t files = 0;
  std::size_t rows = 0;
  std::size_t warnings = 0;
  std::size_t asc_tokens = 0;
};

// Writes one CSV row per readable input file, in name order. Unreadable or
// malformed files are reported through `warn` and left out. Throws on a bad
// norm source, bad options, or failure to write the output.
AnalyzeSummary analyze(const AnalyzeOptions& opts, const WarningSink& warn = {});

struct BuildNormsOptions {
  std::filesystem::path corpus_dir;
  std::filesystem::path output;
  std::string label;
  bool recursive = false;
};

// Tags every *.conllu file in the corpus and saves the counts. Malformed
// files are skipped with a warning. Throws "empty norm table" if nothing
// was tagged.
NormTable build_norms_from_dir(const BuildNormsOptions& opts, const WarningSink& warn = {});

struct StatsOptions {
  std::filesystem::path indices_csv;
  std::filesystem::path scores_csv;
  std::filesystem::path report;
  std::string score_column = "score";
  // When non-empty, the target is the row mean of these score columns.
  std::vector<std::string> composite;
  double threshold = 0.10;
  double vif_limit = 5.0;
  double delta_aic = 4.0;
};

inline constexpr std::size_t kMinJoinedRows = 10;

// Joins the indices CSV with a scores CSV on "filename". Rows without a
// usable score are not joined. Throws Error(kStats) with the join count if
// fewer than 10 rows match.
stats::FeatureMatrix join_indices_scores(const csv::Table& indices, const csv::Table& scores,
                                         const StatsOptions& opts);

struct StatsOutcome {
  stats::FilterResult filter;
  std::size_t dropped_rows = 0;
  std::vector<std::string> after_vif;
  stats::AicSelection selection;
  std::vector<std::string> best_predictors;
  std::optional<stats::RegressionSummary> model;
  std::string report;
};

// Correlation filter, SOA-family pruning, VIF pruning, AIC subset
// selection, and an OLS fit of the best subset.
StatsOutcome analyze_features(const stats::FeatureMatrix& m, const StatsOptions& opts);

// Reads both CSVs, runs analyze_features, and writes the report file.
StatsOutcome run_stats(const StatsOptions& opts);

}  // namespace ascan

#endif  // ASCAN_PIPELINE_HPP_
