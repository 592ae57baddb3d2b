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

#include "ascan/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "ascan/error.hpp"

namespace ascan {

namespace fs = std::filesystem;

namespace {

struct FileResult {
  bool ok = false;
  std::string row;
  std::string debug;
  std::string warning;
  std::size_t tags = 0;
};

Document read_document(const InputFile& f) {
  std::ifstream in(f.path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open");
  return parse_conllu(in, f.name);
}

template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

std::optional<double> parse_number(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::kParse, "non-numeric cell '" + cell + "'");
  }
  return v;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string p_text(double p) { return p < 0.001 ? "<.001" : fixed(p, 3); }

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out.empty() ? "(none)" : out;
}

}  // namespace

std::vector<InputFile> discover_conllu(const fs::path& dir, bool recursive) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorKind::kIo, "input directory does not exist: " + dir.string());
  }
  std::vector<InputFile> files;
  auto consider = [&](const fs::directory_entry& e) {
    if (!e.is_regular_file() || e.path().extension() != ".conllu") return;
    files.push_back({e.path(), fs::relative(e.path(), dir).generic_string()});
  };
  if (recursive) {
    for (const auto& e : fs::recursive_directory_iterator(dir)) consider(e);
  } else {
    for (const auto& e : fs::directory_iterator(dir)) consider(e);
  }
  std::sort(files.begin(), files.end(),
            [](const InputFile& a, const InputFile& b) { return a.name < b.name; });
  return files;
}

std::string format_value(MaybeValue v) {
  if (!v) return {};
  double x = *v == 0.0 ? 0.0 : *v;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string csv_header() {
  std::string out = "filename";
  for (const auto& name : canonical_index_names()) out += "," + name;
  return out;
}

std::string csv_row(const std::string& filename, const IndexVector& v) {
  std::string out = filename;
  for (const auto& [name, value] : v.entries()) out += "," + format_value(value);
  return out;
}

AnalyzeSummary analyze(const AnalyzeOptions& opts, const WarningSink& warn) {
  opts.index.validate();
  if (opts.jobs < 1) throw Error(ErrorKind::kInvalidArgument, "--jobs must be >= 1");
  if (opts.source.empty()) throw Error(ErrorKind::kInvalidArgument, "missing norm source");
  const NormTable norms = resolve_norms(opts.source);
  const auto files = discover_conllu(opts.input_dir, opts.recursive);
  if (files.empty()) {
    throw Error(ErrorKind::kIo, "no *.conllu files in " + opts.input_dir.string());
  }

  const Tagger tagger;
  const bool want_debug = opts.debug_tags.has_value();
  std::vector<FileResult> results(files.size());
  parallel_for(files.size(), opts.jobs, [&](std::size_t i) {
    FileResult& r = results[i];
    if (files[i].name.find_first_of(",\"\r\n") != std::string::npos) {
      r.warning = files[i].name + ": skipped, file name cannot be written to the CSV";
      return;
    }
    try {
      Document doc = read_document(files[i]);
      auto tags = tagger.tag_document(doc);
      r.tags = tags.size();
      r.row = csv_row(files[i].name, compute_indices(tags, norms, opts.index));
      if (want_debug) {
        std::ostringstream dbg;
        write_debug_tags(dbg, tags);
        r.debug = dbg.str();
      }
      r.ok = true;
    } catch (const std::exception& e) {
      r.warning = files[i].name + ": skipped, " + e.what();
    }
  });

  AnalyzeSummary summary;
  summary.files = files.size();
  std::ofstream out(opts.output_csv, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + opts.output_csv.string());
  out << csv_header() << '\n';
  std::string debug;
  for (const auto& r : results) {
    if (!r.ok) {
      ++summary.warnings;
      if (warn) warn(r.warning);
      continue;
    }
    out << r.row << '\n';
    debug += r.debug;
    ++summary.rows;
    summary.asc_tokens += r.tags;
  }
  if (!out.flush()) throw Error(ErrorKind::kIo, "write failed: " + opts.output_csv.string());

  if (want_debug) {
    if (*opts.debug_tags == "-") {
      std::cout << debug << std::flush;
    } else {
      std::ofstream dbg(*opts.debug_tags, std::ios::binary);
      if (!dbg || !(dbg << debug) || !dbg.flush()) {
        throw Error(ErrorKind::kIo, "cannot write " + *opts.debug_tags);
      }
    }
  }
  return summary;
}

NormTable build_norms_from_dir(const BuildNormsOptions& opts, const WarningSink& warn) {
  const auto files = discover_conllu(opts.corpus_dir, opts.recursive);
  const Tagger tagger;
  NormBuilder builder;
  for (const auto& f : files) {
    try {
      builder.add(tagger.tag_document(read_document(f)));
    } catch (const std::exception& e) {
      if (warn) warn(f.name + ": skipped, " + e.what());
    }
  }
  std::string label = opts.label.empty() ? opts.corpus_dir.filename().string() : opts.label;
  NormTable table = builder.finish(std::move(label));
  save_norms(table, opts.output);
  return table;
}

stats::FeatureMatrix join_indices_scores(const csv::Table& indices, const csv::Table& scores,
                                         const StatsOptions& opts) {
  const std::size_t idx_file = indices.column("filename");
  const std::size_t sc_file = scores.column("filename");
  std::vector<std::size_t> score_cols;
  if (opts.composite.empty()) {
    score_cols.push_back(scores.column(opts.score_column));
  } else {
    for (const auto& c : opts.composite) score_cols.push_back(scores.column(c));
  }

  std::map<std::string, double> target_by_file;
  for (const auto& row : scores.rows) {
    double sum = 0.0;
    bool ok = true;
    for (std::size_t c : score_cols) {
      auto v = parse_number(row[c]);
      if (!v) {
        ok = false;
        break;
      }
      sum += *v;
    }
    if (ok) target_by_file[row[sc_file]] = sum / static_cast<double>(score_cols.size());
  }

  stats::FeatureMatrix m;
  std::vector<std::size_t> feature_cols;
  for (std::size_t c = 0; c < indices.header.size(); ++c) {
    if (c == idx_file) continue;
    feature_cols.push_back(c);
    m.names.push_back(indices.header[c]);
  }
  m.columns.resize(feature_cols.size());
  for (const auto& row : indices.rows) {
    auto it = target_by_file.find(row[idx_file]);
    if (it == target_by_file.end()) continue;
    m.row_ids.push_back(row[idx_file]);
    m.target.push_back(it->second);
    for (std::size_t j = 0; j < feature_cols.size(); ++j) {
      m.columns[j].push_back(parse_number(row[feature_cols[j]]));
    }
  }
  if (m.rows() < kMinJoinedRows) {
    throw Error(ErrorKind::kStats, "join on filename matched " + std::to_string(m.rows()) +
                                       " rows; at least " + std::to_string(kMinJoinedRows) +
                                       " are required");
  }
  return m;
}

StatsOutcome analyze_features(const stats::FeatureMatrix& m, const StatsOptions& opts) {
  if (std::adjacent_find(m.target.begin(), m.target.end(), std::not_equal_to<>()) ==
      m.target.end()) {
    throw Error(ErrorKind::kStats, "constant vector: the score column does not vary");
  }

  StatsOutcome out;
  out.filter = stats::bivariate_filter(m, opts.threshold);
  stats::CompleteCases cc = stats::complete_cases(m, out.filter.selected);
  out.dropped_rows = cc.dropped;

  std::ostringstream rep;
  rep << "ASC index correlations with score\n";
  rep << "index\tr\tn\tstatus\n";
  for (const auto& c : out.filter.correlations) {
    std::string status = "dropped";
    if (std::find(out.filter.selected.begin(), out.filter.selected.end(), c.name) !=
        out.filter.selected.end()) {
      status = "kept";
    } else if (std::find(out.filter.passed.begin(), out.filter.passed.end(), c.name) !=
               out.filter.passed.end()) {
      status = "pruned (weaker SOA family member)";
    } else if (!c.r) {
      status = "undefined";
    }
    rep << c.name << '\t' << (c.r ? fixed(*c.r, 3) : "NA") << '\t' << c.n << '\t' << status
        << '\n';
  }
  rep << "\nModel selection\n";
  rep << "rows joined: " << m.rows() << "\n";
  rep << "bivariate filter |r| >= " << fixed(opts.threshold, 2) << ": "
      << out.filter.selected.size() << " indices retained\n";
  rep << "rows dropped for missing values: " << cc.dropped << "\n";

  const auto n_rows = static_cast<std::size_t>(cc.y.size());
  if (!cc.names.empty() && n_rows < cc.names.size() + 2) {
    throw Error(ErrorKind::kStats, "only " + std::to_string(n_rows) +
                                       " complete rows for " + std::to_string(cc.names.size()) +
                                       " retained indices");
  }

  auto alive = stats::vif_prune(cc.x, opts.vif_limit);
  Eigen::MatrixXd x(cc.x.rows(), static_cast<Eigen::Index>(alive.size()));
  for (std::size_t j = 0; j < alive.size(); ++j) {
    x.col(static_cast<Eigen::Index>(j)) = cc.x.col(static_cast<Eigen::Index>(alive[j]));
    out.after_vif.push_back(cc.names[alive[j]]);
  }
  std::vector<std::string> vif_dropped;
  for (const auto& name : cc.names) {
    if (std::find(out.after_vif.begin(), out.after_vif.end(), name) == out.after_vif.end()) {
      vif_dropped.push_back(name);
    }
  }
  rep << "VIF pruning (limit " << fixed(opts.vif_limit, 1) << ") removed: " << join(vif_dropped)
      << "\n";

  out.selection = stats::aic_select(x, cc.y, opts.delta_aic);
  rep << "AIC search (" << (out.selection.exhaustive ? "exhaustive" : "stepwise") << ", "
      << out.selection.models_evaluated << " models): " << out.selection.competitive.size()
      << " with dAIC < " << fixed(opts.delta_aic, 1) << "\n";
  constexpr std::size_t kListedModels = 20;
  for (std::size_t i = 0; i < out.selection.competitive.size(); ++i) {
    if (i == kListedModels) {
      rep << "  ... " << out.selection.competitive.size() - i << " more\n";
      break;
    }
    const auto& cand = out.selection.competitive[i];
    std::vector<std::string> names;
    for (std::size_t j : cand.predictors) names.push_back(out.after_vif[j]);
    rep << "  AIC " << fixed(cand.aic, 3) << "  dAIC " << fixed(cand.aic - out.selection.best.aic, 3)
        << "  " << join(names) << "\n";
  }
  for (std::size_t j : out.selection.best.predictors) out.best_predictors.push_back(out.after_vif[j]);

  Eigen::MatrixXd xb(x.rows(), static_cast<Eigen::Index>(out.best_predictors.size()));
  for (std::size_t j = 0; j < out.selection.best.predictors.size(); ++j) {
    xb.col(static_cast<Eigen::Index>(j)) =
        x.col(static_cast<Eigen::Index>(out.selection.best.predictors[j]));
  }
  out.model = stats::ols_fit(xb, cc.y, out.best_predictors);
  const auto& s = *out.model;

  rep << "\nRegression model predicting score (n = " << s.n << ")\n";
  rep << "predictor\testimate\tSE\tt\tp\trel_imp_pct\n";
  for (const auto& c : s.coefficients) {
    std::string imp = "--";
    if (c.lmg && s.r_squared > 0.0) imp = fixed(100.0 * *c.lmg / s.r_squared, 1);
    rep << c.name << '\t' << fixed(c.estimate, 3) << '\t' << fixed(c.std_error, 3) << '\t'
        << fixed(c.t, 2) << '\t' << p_text(c.p) << '\t' << imp << '\n';
  }
  rep << "R^2 = " << fixed(s.r_squared, 3) << " (adj. " << fixed(s.adj_r_squared, 3)
      << "); RSE = " << fixed(s.residual_std_error, 3);
  if (s.f_statistic) {
    rep << "; F(" << s.df_model << "," << s.df_residual << ") = " << fixed(*s.f_statistic, 1)
        << ", p " << (*s.f_p_value < 0.001 ? "<.001" : "= " + fixed(*s.f_p_value, 3));
  }
  rep << "\n";
  if (!s.has_relative_importance && s.df_model > 0) {
    rep << "relative importance not computed for more than " << stats::kLmgPredictorLimit
        << " predictors\n";
  }
  out.report = rep.str();
  return out;
}

StatsOutcome run_stats(const StatsOptions& opts) {
  csv::Table indices = csv::read_file(opts.indices_csv);
  csv::Table scores = csv::read_file(opts.scores_csv);
  StatsOutcome out = analyze_features(join_indices_scores(indices, scores, opts), opts);
  std::ofstream rep(opts.report, std::ios::binary);
  if (!rep || !(rep << out.report) || !rep.flush()) {
    throw Error(ErrorKind::kIo, "cannot write " + opts.report.string());
  }
  return out;
}

}  // namespace ascan
