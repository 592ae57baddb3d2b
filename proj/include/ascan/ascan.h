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

#ifndef ASCAN_ASCAN_H_
#define ASCAN_ASCAN_H_

/*
 * C interface to the ASC analyzer: CoNLL-U ingestion, argument structure
 * construction tagging, reference norms, per-text indices, and the
 * correlation/regression report.
 *
 * Every function that can fail returns an ascan_status. On failure a
 * human-readable message is available from ascan_last_error() until the
 * next failing call on the same thread. Objects returned through out
 * parameters are owned by the caller and released with the matching
 * *_free function. Strings returned as char* are released with
 * ascan_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ASCAN_BUILDING_LIBRARY)
#    define ASCAN_API __declspec(dllexport)
#  else
#    define ASCAN_API __declspec(dllimport)
#  endif
#else
#  define ASCAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ascan_status {
  ASCAN_OK = 0,
  ASCAN_ERR_INVALID_ARGUMENT = 1,
  ASCAN_ERR_PARSE = 2,
  ASCAN_ERR_IO = 3,
  ASCAN_ERR_NORMS = 4,
  ASCAN_ERR_STATS = 5,
  ASCAN_ERR_INTERNAL = 6
} ascan_status;

typedef struct ascan_document ascan_document;
typedef struct ascan_norms ascan_norms;
typedef struct ascan_indices ascan_indices;

/* Receives one message per skipped input file. */
typedef void (*ascan_warning_fn)(const char* message, void* user_data);

ASCAN_API const char* ascan_version(void);
ASCAN_API const char* ascan_last_error(void);
ASCAN_API const char* ascan_status_name(ascan_status status);
ASCAN_API void ascan_string_free(char* s);

/* ---- documents ---------------------------------------------------------- */

ASCAN_API ascan_status ascan_document_parse(const char* data, size_t length,
                                            const char* source_id, ascan_document** out);
/* source_id is the file name. */
ASCAN_API ascan_status ascan_document_parse_file(const char* path, ascan_document** out);
ASCAN_API void ascan_document_free(ascan_document* doc);
ASCAN_API size_t ascan_document_sentence_count(const ascan_document* doc);
ASCAN_API size_t ascan_document_token_count(const ascan_document* doc);

/* Tagger debug stream for the document: one line per ASC token,
 * "source_id\tsentence_index\tverb_token_id\tasc_type\tverb_lemma\n". */
ASCAN_API ascan_status ascan_document_tag(const ascan_document* doc, char** out_tsv,
                                          size_t* out_count);

/* ---- norms -------------------------------------------------------------- */

/* A bundled table name ("demo"), a name under $ASCAN_NORMS_DIR, or a path. */
ASCAN_API ascan_status ascan_norms_resolve(const char* selector, ascan_norms** out);
ASCAN_API ascan_status ascan_norms_load(const char* path, ascan_norms** out);
ASCAN_API ascan_status ascan_norms_save(const ascan_norms* norms, const char* path);
/* Tags every *.conllu file in corpus_dir, writes the TSV to out_path, and
 * optionally returns the table. out and on_warning may be NULL. */
ASCAN_API ascan_status ascan_norms_build_dir(const char* corpus_dir, const char* out_path,
                                             const char* label, int recursive,
                                             ascan_warning_fn on_warning, void* user_data,
                                             ascan_norms** out);
ASCAN_API void ascan_norms_free(ascan_norms* norms);
ASCAN_API int64_t ascan_norms_total(const ascan_norms* norms);
ASCAN_API size_t ascan_norms_pair_types(const ascan_norms* norms);
/* cells = {a, b, c, d}. */
ASCAN_API ascan_status ascan_norms_contingency(const ascan_norms* norms, const char* asc_type,
                                               const char* lemma, int64_t cells[4]);

/* ---- indices ------------------------------------------------------------ */

typedef struct ascan_index_config {
  int window;        /* default 11 */
  int min_ref_freq;  /* default 5 */
} ascan_index_config;

ASCAN_API ascan_index_config ascan_index_config_default(void);

/* Number of canonical indices (54) and their names in CSV column order. */
ASCAN_API size_t ascan_index_count(void);
ASCAN_API const char* ascan_index_name(size_t i);

/* config may be NULL for defaults. */
ASCAN_API ascan_status ascan_indices_compute(const ascan_document* doc, const ascan_norms* norms,
                                             const ascan_index_config* config,
                                             ascan_indices** out);
ASCAN_API void ascan_indices_free(ascan_indices* indices);
/* Returns 1 and stores the value if index i is present, 0 if it is missing
 * or i is out of range. */
ASCAN_API int ascan_indices_value(const ascan_indices* indices, size_t i, double* value);

/* ---- batch drivers ------------------------------------------------------ */

typedef struct ascan_analyze_options {
  const char* input_dir;
  const char* output_csv;
  const char* source;
  ascan_index_config index;
  int recursive;
  int jobs;
  const char* debug_tags; /* NULL: off; "-": stdout; otherwise a file path */
  ascan_warning_fn on_warning;
  void* user_data;
} ascan_analyze_options;

typedef struct ascan_analyze_summary {
  size_t files;
  size_t rows;
  size_t warnings;
  size_t asc_tokens;
} ascan_analyze_summary;

ASCAN_API ascan_analyze_options ascan_analyze_options_default(void);
ASCAN_API ascan_status ascan_analyze(const ascan_analyze_options* options,
                                     ascan_analyze_summary* summary);

typedef struct ascan_stats_options {
  const char* indices_csv;
  const char* scores_csv;
  const char* report_path;
  const char* score_column; /* default "score" */
  const char* composite;    /* comma-separated score columns to average, or NULL */
  double threshold;         /* default 0.10 */
  double vif_limit;         /* default 5 */
  double delta_aic;         /* default 4 */
} ascan_stats_options;

typedef struct ascan_stats_summary {
  size_t rows;
  size_t retained;   /* indices kept by the bivariate filter */
  size_t predictors; /* predictors in the best model */
  double r_squared;
  double adj_r_squared;
} ascan_stats_summary;

ASCAN_API ascan_stats_options ascan_stats_options_default(void);
ASCAN_API ascan_status ascan_stats_run(const ascan_stats_options* options,
                                       ascan_stats_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* ASCAN_ASCAN_H_ */
