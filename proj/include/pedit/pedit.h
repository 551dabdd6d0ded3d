/*
 * Copyright 2026 The pedit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the pedit library. All objects are opaque handles created
 * by pedit_*_new / load / compute calls and released with the matching
 * *_free function (NULL is accepted). Every fallible call returns a
 * pedit_status; on failure pedit_last_error() describes the problem for the
 * calling thread until its next failing call.
 */

#ifndef PEDIT_PEDIT_H
#define PEDIT_PEDIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(PEDIT_BUILDING_LIBRARY)
#define PEDIT_API __attribute__((visibility("default")))
#else
#define PEDIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pedit_status {
  PEDIT_OK = 0,
  PEDIT_ERR_INVALID_ARGUMENT = 1,
  PEDIT_ERR_GUARD = 2, /* size guard refused a quadratic computation */
  PEDIT_ERR_IO = 3,
  PEDIT_ERR_MISMATCH = 4, /* profile does not belong to the given string */
  PEDIT_ERR_OUT_OF_RANGE = 5,
  PEDIT_ERR_INTERNAL = 6
} pedit_status;

typedef enum pedit_format { PEDIT_FORMAT_RAW = 0, PEDIT_FORMAT_LINES = 1 } pedit_format;

PEDIT_API const char* pedit_version(void);
PEDIT_API const char* pedit_last_error(void);
PEDIT_API const char* pedit_status_name(pedit_status status);

/* Warnings left by the most recent approx / detect / query call on this thread. */
PEDIT_API size_t pedit_warning_count(void);
PEDIT_API const char* pedit_warning(size_t index);

/* ---- alphabets and texts ---------------------------------------------- */

typedef struct pedit_alphabet pedit_alphabet;
typedef struct pedit_text pedit_text;

PEDIT_API pedit_status pedit_alphabet_new(const char* chars, pedit_alphabet** out);
/* "ACGT" prefixes up to 4, then lowercase, uppercase and digits. */
PEDIT_API pedit_status pedit_alphabet_standard(unsigned size, pedit_alphabet** out);
/* Sorted distinct bytes over every string in the given files. */
PEDIT_API pedit_status pedit_alphabet_detect_files(const char* const* paths, size_t count,
                                                   pedit_format format, pedit_alphabet** out);
PEDIT_API size_t pedit_alphabet_size(const pedit_alphabet* a);
PEDIT_API const char* pedit_alphabet_chars(const pedit_alphabet* a);
PEDIT_API void pedit_alphabet_free(pedit_alphabet* a);

PEDIT_API pedit_status pedit_text_from_bytes(const pedit_alphabet* a, const char* bytes,
                                             size_t length, pedit_text** out);
/* Loads string number `line` (0 for raw files). */
PEDIT_API pedit_status pedit_text_load(const pedit_alphabet* a, const char* path,
                                       pedit_format format, size_t line, pedit_text** out);
/* Number of strings a file holds in the given format. */
PEDIT_API pedit_status pedit_file_string_count(const char* path, pedit_format format,
                                               size_t* count);
PEDIT_API pedit_status pedit_text_save(const pedit_text* t, const char* path);
PEDIT_API size_t pedit_text_length(const pedit_text* t);
/* NUL-terminated decoded string, owned by the handle. */
PEDIT_API const char* pedit_text_bytes(const pedit_text* t);
PEDIT_API uint64_t pedit_text_checksum(const pedit_text* t);
PEDIT_API void pedit_text_free(pedit_text* t);

/* ---- edit scripts ------------------------------------------------------ */

typedef struct pedit_script pedit_script;

PEDIT_API size_t pedit_script_length(const pedit_script* s);
/* kind is 'D', 'I' or 'S'; pos is 1-based; symbol is 0 for deletions. */
PEDIT_API pedit_status pedit_script_op(const pedit_script* s, size_t index, char* kind,
                                       size_t* pos, char* symbol);
PEDIT_API pedit_status pedit_script_apply(const pedit_script* s, const pedit_text* source,
                                          pedit_text** out);
/* One op per line: "D pos", "I pos c", "S pos c". */
PEDIT_API pedit_status pedit_script_save(const pedit_script* s, const char* path);
PEDIT_API void pedit_script_free(pedit_script* s);

/* ---- distances --------------------------------------------------------- */

/* Largest |u| * |v| the exact DP accepts without force, and the hard cap
 * for a traceback script. */
#define PEDIT_EXACT_CELL_LIMIT (((uint64_t)1) << 30)

/* script and work_units may be NULL. */
PEDIT_API pedit_status pedit_ed_exact(const pedit_text* u, const pedit_text* v, int force,
                                      uint64_t* distance, pedit_script** script,
                                      uint64_t* work_units);
/* *within is 1 and *distance set when ed(u, v) <= k. */
PEDIT_API pedit_status pedit_ed_bounded(const pedit_text* u, const pedit_text* v, uint64_t k,
                                        int* within, uint64_t* distance, uint64_t* work_units);

/* Parses "1/4", "0.25" or "1" into inv_p = 1/p. */
PEDIT_API pedit_status pedit_parse_p(const char* text, uint64_t* inv_p);

typedef struct pedit_approx_config {
  uint64_t inv_p;          /* power of two */
  size_t B;
  uint32_t repetitions;    /* 0: ceil(log2 n) */
  uint32_t attempts_coeff; /* default 100 */
  int interpolate_gaps;    /* default 1 */
  int merge_substitutions; /* default 1 */
  uint64_t seed;
} pedit_approx_config;

typedef struct pedit_approx_result {
  uint64_t estimate;
  uint32_t repetitions;
  uint64_t work_units;
  uint64_t oracle_evaluations;
  int trivial;       /* the delete/insert fallback script won */
  uint64_t inv_p_used;
  int clamped;       /* p was raised to 1/B */
} pedit_approx_result;

PEDIT_API void pedit_approx_config_default(pedit_approx_config* config);
/* script may be NULL. */
PEDIT_API pedit_status pedit_approx(const pedit_text* x, const pedit_text* y,
                                    const pedit_approx_config* config,
                                    pedit_approx_result* result, pedit_script** script);

/* ---- clean alignment over an explicit relation ------------------------- */

typedef struct pedit_alignment pedit_alignment;

typedef struct pedit_clean_result {
  size_t u_len, v_len;
  uint64_t x_portion, y_portion, total;
  uint64_t evaluations, queries;
  int has_optimum; /* brute force ran (both sides <= 64) */
  uint64_t optimum_total;
} pedit_clean_result;

/* Matrix file: one row per u index, '0'/'1' per v index; blanks ignored. */
PEDIT_API pedit_status pedit_clean_align_file(const char* path, uint64_t seed,
                                              uint32_t attempts_coeff, int brute_force,
                                              pedit_clean_result* result,
                                              pedit_alignment** alignment);
PEDIT_API size_t pedit_alignment_length(const pedit_alignment* a);
PEDIT_API pedit_status pedit_alignment_pair(const pedit_alignment* a, size_t index, size_t* i,
                                            size_t* j);
PEDIT_API void pedit_alignment_free(pedit_alignment* a);

/* ---- pseudorandomness audit -------------------------------------------- */

#define PEDIT_EXACT_AUDIT_LIMIT (((size_t)1) << 16)

typedef struct pedit_audit_result {
  int exact;
  size_t n, padded_length, blocks;
  uint64_t m_value;         /* exact mode */
  int verdict;              /* sampled mode */
  double threshold, coeff, failure_bound;
  uint64_t sample_size, samples_drawn, failures;
  uint64_t work_units;
} pedit_audit_result;

/* Number of 6B-blocks of a string of length n. */
PEDIT_API size_t pedit_block_count(size_t n, size_t B);
/* flags (may be NULL) receives one byte per block, 1 = p-unique; it must
 * hold pedit_block_count(n, B) bytes. */
PEDIT_API pedit_status pedit_audit_exact(const pedit_text* x, uint64_t inv_p, size_t B,
                                         int force, pedit_audit_result* result,
                                         uint8_t* flags);
PEDIT_API pedit_status pedit_audit_sampled(const pedit_text* x, uint64_t inv_p, size_t B,
                                           double threshold, uint64_t seed, double coeff,
                                           pedit_audit_result* result);

/* ---- parameter detection ----------------------------------------------- */

typedef struct pedit_profile pedit_profile;

typedef struct pedit_detect_config {
  double budget_coeff; /* default 4 */
  double sample_coeff; /* default 8 */
  uint64_t slice;      /* default 65536 */
  uint64_t seed;
} pedit_detect_config;

typedef struct pedit_detect_result {
  uint64_t estimate;
  int exact;
  int fallback;
  size_t detected_B; /* 0 when no level was accepted */
  uint64_t inv_p_used;
  double threshold;
  uint64_t work_units, low_distance_units, search_units, approx_units;
  size_t levels_tested;
} pedit_detect_result;

PEDIT_API void pedit_detect_config_default(pedit_detect_config* config);
PEDIT_API pedit_status pedit_detect(const pedit_text* x, const pedit_text* y, uint64_t alpha,
                                    const pedit_detect_config* config,
                                    pedit_detect_result* result, pedit_script** script);
PEDIT_API pedit_status pedit_preprocess(const pedit_text* x, uint64_t alpha, uint64_t seed,
                                        double sample_coeff, pedit_profile** out);
PEDIT_API pedit_status pedit_query(const pedit_profile* profile, const pedit_text* x,
                                   const pedit_text* y, const pedit_detect_config* config,
                                   pedit_detect_result* result, pedit_script** script);
PEDIT_API pedit_status pedit_profile_save(const pedit_profile* p, const char* path);
PEDIT_API pedit_status pedit_profile_load(const char* path, pedit_profile** out);
/* JSON text owned by the handle. */
PEDIT_API const char* pedit_profile_json(const pedit_profile* p);
PEDIT_API size_t pedit_profile_detected_B(const pedit_profile* p);
PEDIT_API int pedit_profile_fallback(const pedit_profile* p);
PEDIT_API void pedit_profile_free(pedit_profile* p);

/* ---- generation and benchmarks ----------------------------------------- */

typedef struct pedit_gen_spec {
  const char* kind; /* uniform | edits-from-x | smoothed | planted-duplicates */
  size_t n;
  unsigned alphabet_size;
  uint64_t seed;
  size_t k;
  double p_perturb;
  size_t period;
  size_t scale;
  double fraction;
} pedit_gen_spec;

PEDIT_API void pedit_gen_spec_default(pedit_gen_spec* spec);
/* *y is set to NULL for kinds that produce only x. The texts use
 * pedit_alphabet_standard(alphabet_size). */
PEDIT_API pedit_status pedit_generate(const pedit_gen_spec* spec, pedit_text** x,
                                      pedit_text** y);
PEDIT_API pedit_status pedit_bench_run(const char* config_path, unsigned jobs, int force,
                                       const char* csv_path, const char* jsonl_path,
                                       size_t* records);

#ifdef __cplusplus
}
#endif

#endif /* PEDIT_PEDIT_H */
