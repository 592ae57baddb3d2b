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

// Glue between the public C interface and the C++ implementation.

#include "ascan/ascan.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ascan/conllu.hpp"
#include "ascan/error.hpp"
#include "ascan/indices.hpp"
#include "ascan/norms.hpp"
#include "ascan/pipeline.hpp"
#include "ascan/tagger.hpp"

struct ascan_document {
  ascan::Document doc;
};

struct ascan_norms {
  ascan::NormTable table;
};

struct ascan_indices {
  ascan::IndexVector values;
};

namespace {

thread_local std::string g_last_error;

ascan_status fail(ascan_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

ascan_status status_of(ascan::ErrorKind kind) {
  switch (kind) {
    case ascan::ErrorKind::kInvalidArgument: return ASCAN_ERR_INVALID_ARGUMENT;
    case ascan::ErrorKind::kParse: return ASCAN_ERR_PARSE;
    case ascan::ErrorKind::kIo: return ASCAN_ERR_IO;
    case ascan::ErrorKind::kNorms: return ASCAN_ERR_NORMS;
    case ascan::ErrorKind::kStats: return ASCAN_ERR_STATS;
  }
  return ASCAN_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
ascan_status guarded(Fn&& fn) {
  try {
    fn();
    return ASCAN_OK;
  } catch (const ascan::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ASCAN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ASCAN_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ascan::IndexConfig to_config(const ascan_index_config* c) {
  ascan::IndexConfig cfg;
  if (c) {
    cfg.window = c->window;
    cfg.min_ref_freq = c->min_ref_freq;
  }
  return cfg;
}

std::vector<std::string> split_commas(const char* s) {
  std::vector<std::string> out;
  if (!s) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

#define ASCAN_REQUIRE(cond, what) \
  if (!(cond)) return fail(ASCAN_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* ascan_version(void) { return "1.0.0"; }

const char* ascan_last_error(void) { return g_last_error.c_str(); }

const char* ascan_status_name(ascan_status status) {
  switch (status) {
    case ASCAN_OK: return "ok";
    case ASCAN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ASCAN_ERR_PARSE: return "parse error";
    case ASCAN_ERR_IO: return "i/o error";
    case ASCAN_ERR_NORMS: return "norm table error";
    case ASCAN_ERR_STATS: return "statistics error";
    case ASCAN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ascan_string_free(char* s) { std::free(s); }

ascan_status ascan_document_parse(const char* data, size_t length, const char* source_id,
                                  ascan_document** out) {
  ASCAN_REQUIRE(out, "out is NULL");
  ASCAN_REQUIRE(data || length == 0, "data is NULL");
  *out = nullptr;
  return guarded([&] {
    std::string_view text(data ? data : "", length);
    *out = new ascan_document{ascan::parse_conllu(text, source_id ? source_id : "")};
  });
}

ascan_status ascan_document_parse_file(const char* path, ascan_document** out) {
  ASCAN_REQUIRE(out && path, "path or out is NULL");
  *out = nullptr;
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ascan::Error(ascan::ErrorKind::kIo, std::string("cannot open ") + path);
    std::string name = std::filesystem::path(path).filename().string();
    *out = new ascan_document{ascan::parse_conllu(in, name)};
  });
}

void ascan_document_free(ascan_document* doc) { delete doc; }

size_t ascan_document_sentence_count(const ascan_document* doc) {
  return doc ? doc->doc.sentences.size() : 0;
}

size_t ascan_document_token_count(const ascan_document* doc) {
  return doc ? doc->doc.token_count() : 0;
}

ascan_status ascan_document_tag(const ascan_document* doc, char** out_tsv, size_t* out_count) {
  ASCAN_REQUIRE(doc && out_tsv, "doc or out_tsv is NULL");
  *out_tsv = nullptr;
  return guarded([&] {
    auto tags = ascan::Tagger().tag_document(doc->doc);
    std::ostringstream s;
    ascan::write_debug_tags(s, tags);
    *out_tsv = dup_string(s.str());
    if (out_count) *out_count = tags.size();
  });
}

ascan_status ascan_norms_resolve(const char* selector, ascan_norms** out) {
  ASCAN_REQUIRE(selector && out, "selector or out is NULL");
  *out = nullptr;
  return guarded([&] { *out = new ascan_norms{ascan::resolve_norms(selector)}; });
}

ascan_status ascan_norms_load(const char* path, ascan_norms** out) {
  ASCAN_REQUIRE(path && out, "path or out is NULL");
  *out = nullptr;
  return guarded([&] { *out = new ascan_norms{ascan::load_norms(path)}; });
}

ascan_status ascan_norms_save(const ascan_norms* norms, const char* path) {
  ASCAN_REQUIRE(norms && path, "norms or path is NULL");
  return guarded([&] { ascan::save_norms(norms->table, path); });
}

ascan_status ascan_norms_build_dir(const char* corpus_dir, const char* out_path,
                                   const char* label, int recursive,
                                   ascan_warning_fn on_warning, void* user_data,
                                   ascan_norms** out) {
  ASCAN_REQUIRE(corpus_dir && out_path, "corpus_dir or out_path is NULL");
  if (out) *out = nullptr;
  return guarded([&] {
    ascan::BuildNormsOptions opts{corpus_dir, out_path, label ? label : "", recursive != 0};
    ascan::WarningSink warn;
    if (on_warning) warn = [&](const std::string& msg) { on_warning(msg.c_str(), user_data); };
    auto table = ascan::build_norms_from_dir(opts, warn);
    if (out) *out = new ascan_norms{std::move(table)};
  });
}

void ascan_norms_free(ascan_norms* norms) { delete norms; }

int64_t ascan_norms_total(const ascan_norms* norms) { return norms ? norms->table.total() : 0; }

size_t ascan_norms_pair_types(const ascan_norms* norms) {
  return norms ? norms->table.pair_counts().size() : 0;
}

ascan_status ascan_norms_contingency(const ascan_norms* norms, const char* asc_type,
                                     const char* lemma, int64_t cells[4]) {
  ASCAN_REQUIRE(norms && asc_type && lemma && cells, "NULL argument");
  auto type = ascan::asc_type_from_string(asc_type);
  if (!type) return fail(ASCAN_ERR_INVALID_ARGUMENT, std::string("unknown ASC type ") + asc_type);
  auto c = norms->table.contingency(*type, lemma);
  cells[0] = c.a;
  cells[1] = c.b;
  cells[2] = c.c_cell;
  cells[3] = c.d;
  return ASCAN_OK;
}

ascan_index_config ascan_index_config_default(void) {
  ascan::IndexConfig cfg;
  return ascan_index_config{cfg.window, cfg.min_ref_freq};
}

size_t ascan_index_count(void) { return ascan::canonical_index_names().size(); }

const char* ascan_index_name(size_t i) {
  const auto& names = ascan::canonical_index_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

ascan_status ascan_indices_compute(const ascan_document* doc, const ascan_norms* norms,
                                   const ascan_index_config* config, ascan_indices** out) {
  ASCAN_REQUIRE(doc && norms && out, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *out = new ascan_indices{ascan::compute_all(doc->doc, norms->table, to_config(config))};
  });
}

void ascan_indices_free(ascan_indices* indices) { delete indices; }

int ascan_indices_value(const ascan_indices* indices, size_t i, double* value) {
  if (!indices || i >= indices->values.size()) return 0;
  const auto& v = indices->values.entries()[i].second;
  if (!v) return 0;
  if (value) *value = *v;
  return 1;
}

ascan_analyze_options ascan_analyze_options_default(void) {
  ascan_analyze_options o{};
  o.index = ascan_index_config_default();
  o.jobs = 1;
  return o;
}

ascan_status ascan_analyze(const ascan_analyze_options* options, ascan_analyze_summary* summary) {
  ASCAN_REQUIRE(options, "options is NULL");
  ASCAN_REQUIRE(options->input_dir && options->output_csv, "input_dir and output_csv are required");
  ASCAN_REQUIRE(options->source && *options->source, "source is required");
  return guarded([&] {
    ascan::AnalyzeOptions opts;
    opts.input_dir = options->input_dir;
    opts.output_csv = options->output_csv;
    opts.source = options->source;
    opts.index = to_config(&options->index);
    opts.recursive = options->recursive != 0;
    opts.jobs = options->jobs;
    if (options->debug_tags) opts.debug_tags = options->debug_tags;
    ascan::WarningSink warn;
    if (options->on_warning) {
      warn = [&](const std::string& msg) { options->on_warning(msg.c_str(), options->user_data); };
    }
    auto s = ascan::analyze(opts, warn);
    if (summary) *summary = ascan_analyze_summary{s.files, s.rows, s.warnings, s.asc_tokens};
  });
}

ascan_stats_options ascan_stats_options_default(void) {
  ascan::StatsOptions d;
  ascan_stats_options o{};
  o.score_column = "score";
  o.threshold = d.threshold;
  o.vif_limit = d.vif_limit;
  o.delta_aic = d.delta_aic;
  return o;
}

ascan_status ascan_stats_run(const ascan_stats_options* options, ascan_stats_summary* summary) {
  ASCAN_REQUIRE(options, "options is NULL");
  ASCAN_REQUIRE(options->indices_csv && options->scores_csv && options->report_path,
                "indices_csv, scores_csv and report_path are required");
  return guarded([&] {
    ascan::StatsOptions opts;
    opts.indices_csv = options->indices_csv;
    opts.scores_csv = options->scores_csv;
    opts.report = options->report_path;
    if (options->score_column) opts.score_column = options->score_column;
    opts.composite = split_commas(options->composite);
    opts.threshold = options->threshold;
    opts.vif_limit = options->vif_limit;
    opts.delta_aic = options->delta_aic;
    auto out = ascan::run_stats(opts);
    if (summary) {
      summary->rows = out.model ? out.model->n : 0;
      summary->retained = out.filter.selected.size();
      summary->predictors = out.best_predictors.size();
      summary->r_squared = out.model ? out.model->r_squared : 0.0;
      summary->adj_r_squared = out.model ? out.model->adj_r_squared : 0.0;
    }
  });
}

}  // extern "C"
