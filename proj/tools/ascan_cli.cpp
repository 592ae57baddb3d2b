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

// ascan: batch driver over the C API.
//
//   ascan analyze --input-dir DIR --output-csv FILE --source demo|PATH
//   ascan build-norms --corpus-dir DIR --out FILE [--label NAME]
//   ascan stats --indices-csv FILE --scores-csv FILE --report FILE
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "ascan/ascan.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

void print_warning(const char* message, void* user_data) {
  auto* count = static_cast<std::size_t*>(user_data);
  ++*count;
  std::fprintf(stderr, "warning: %s\n", message);
}

int report_failure(ascan_status status) {
  std::fprintf(stderr, "error: %s: %s\n", ascan_status_name(status), ascan_last_error());
  return status == ASCAN_ERR_INVALID_ARGUMENT ? kExitUsage : kExitData;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Argument structure construction indices for dependency-parsed texts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ascan_version()));

  // analyze
  std::string input_dir, output_csv, source;
  std::string debug_tags;
  ascan_index_config index = ascan_index_config_default();
  bool recursive = false;
  int jobs = 1;
  auto* analyze = app.add_subcommand("analyze", "Compute per-file indices into a CSV");
  analyze->add_option("--input-dir", input_dir, "Directory of *.conllu files")
      ->required()
      ->check(CLI::ExistingDirectory);
  analyze->add_option("--output-csv", output_csv, "CSV file to write")->required();
  analyze->add_option("--source", source,
                      "Norm table: bundled name (demo), name under $ASCAN_NORMS_DIR "
                      "(e.g. cow, subt), or a TSV path")
      ->required();
  analyze->add_option("--window", index.window, "MATTR window size")
      ->capture_default_str()
      ->check(CLI::Range(2, 1000000));
  analyze->add_option("--min-ref-freq", index.min_ref_freq,
                      "Reference frequency below which tokens are ignored by Freq indices")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  analyze->add_flag("--recursive", recursive, "Search subdirectories");
  analyze->add_option("--jobs", jobs, "Worker threads")
      ->capture_default_str()
      ->check(CLI::Range(1, 1024));
  analyze->add_option("--debug-tags", debug_tags,
                      "Write the tagger debug stream to this file ('-' for stdout)");

  // build-norms
  std::string corpus_dir, norms_out, label;
  bool norms_recursive = false;
  auto* build = app.add_subcommand("build-norms", "Count ASC and ASC-lemma norms over a corpus");
  build->add_option("--corpus-dir", corpus_dir, "Directory of *.conllu files")
      ->required()
      ->check(CLI::ExistingDirectory);
  build->add_option("--out", norms_out, "Norm TSV to write")->required();
  build->add_option("--label", label, "Source label stored in the table header");
  build->add_flag("--recursive", norms_recursive, "Search subdirectories");

  // stats
  std::string indices_csv, scores_csv, report_path, score_column = "score", composite;
  ascan_stats_options stats_opts = ascan_stats_options_default();
  auto* stats = app.add_subcommand("stats", "Correlation filter and regression report");
  stats->add_option("--indices-csv", indices_csv, "Output of 'analyze'")
      ->required()
      ->check(CLI::ExistingFile);
  stats->add_option("--scores-csv", scores_csv, "CSV with a filename column and scores")
      ->required()
      ->check(CLI::ExistingFile);
  stats->add_option("--report", report_path, "Report file to write")->required();
  stats->add_option("--score-column", score_column, "Score column")->capture_default_str();
  stats->add_option("--composite", composite,
                    "Comma-separated score columns averaged into the target")
      ->excludes(stats->get_option("--score-column"));
  stats->add_option("--threshold", stats_opts.threshold, "Minimum |r| to retain an index")
      ->capture_default_str();
  stats->add_option("--vif-limit", stats_opts.vif_limit, "Variance inflation limit")
      ->capture_default_str();
  stats->add_option("--delta-aic", stats_opts.delta_aic, "Competitive model window")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*analyze) {
    std::size_t warnings = 0;
    ascan_analyze_options opts = ascan_analyze_options_default();
    opts.input_dir = input_dir.c_str();
    opts.output_csv = output_csv.c_str();
    opts.source = source.c_str();
    opts.index = index;
    opts.recursive = recursive ? 1 : 0;
    opts.jobs = jobs;
    opts.debug_tags = debug_tags.empty() ? nullptr : debug_tags.c_str();
    opts.on_warning = print_warning;
    opts.user_data = &warnings;
    ascan_analyze_summary summary{};
    ascan_status st = ascan_analyze(&opts, &summary);
    if (st != ASCAN_OK) return report_failure(st);
    std::fprintf(stderr, "analyzed %zu of %zu files (%zu ASC tokens), %zu warnings\n",
                 summary.rows, summary.files, summary.asc_tokens, summary.warnings);
    return 0;
  }

  if (*build) {
    std::size_t warnings = 0;
    ascan_norms* norms = nullptr;
    ascan_status st = ascan_norms_build_dir(corpus_dir.c_str(), norms_out.c_str(), label.c_str(),
                                            norms_recursive ? 1 : 0, print_warning, &warnings,
                                            &norms);
    if (st != ASCAN_OK) return report_failure(st);
    std::printf("total ASC tokens: %lld (%zu ASC-lemma pair types)\n",
                static_cast<long long>(ascan_norms_total(norms)), ascan_norms_pair_types(norms));
    if (warnings) std::fprintf(stderr, "%zu files skipped\n", warnings);
    ascan_norms_free(norms);
    return 0;
  }

  if (*stats) {
    stats_opts.indices_csv = indices_csv.c_str();
    stats_opts.scores_csv = scores_csv.c_str();
    stats_opts.report_path = report_path.c_str();
    stats_opts.score_column = score_column.c_str();
    stats_opts.composite = composite.empty() ? nullptr : composite.c_str();
    ascan_stats_summary summary{};
    ascan_status st = ascan_stats_run(&stats_opts, &summary);
    if (st != ASCAN_OK) return report_failure(st);
    std::printf("rows: %zu, retained indices: %zu, best model predictors: %zu, "
                "R^2 = %.3f (adj. %.3f)\n",
                summary.rows, summary.retained, summary.predictors, summary.r_squared,
                summary.adj_r_squared);
    return 0;
  }
  return kExitUsage;
}
