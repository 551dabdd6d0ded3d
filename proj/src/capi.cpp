// Copyright 2026 The pedit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pedit/pedit.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "pedit/block_reduction.hpp"
#include "pedit/clean_align.hpp"
#include "pedit/edit_distance.hpp"
#include "pedit/error.hpp"
#include "pedit/harness.hpp"
#include "pedit/param_detect.hpp"
#include "pedit/pseudorandom.hpp"
#include "pedit/text.hpp"

struct pedit_alphabet {
  std::shared_ptr<const pedit::Alphabet> a;
};

struct pedit_text {
  std::shared_ptr<const pedit::Alphabet> alpha;
  pedit::Text t;
  std::string bytes;
};

struct pedit_script {
  pedit::EditScript ops;
  std::shared_ptr<const pedit::Alphabet> alpha;
};

struct pedit_alignment {
  pedit::Alignment pairs;
};

struct pedit_profile {
  pedit::SourceProfile p;
  std::string json;
};

namespace {

thread_local std::string g_last_error;
thread_local std::vector<std::string> g_warnings;

pedit_status fail(pedit_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

pedit_status status_of(pedit::ErrorCode c) {
  switch (c) {
    case pedit::ErrorCode::kInvalidArgument:
      return PEDIT_ERR_INVALID_ARGUMENT;
    case pedit::ErrorCode::kGuardRefusal:
      return PEDIT_ERR_GUARD;
    case pedit::ErrorCode::kIo:
      return PEDIT_ERR_IO;
    case pedit::ErrorCode::kMismatch:
      return PEDIT_ERR_MISMATCH;
    case pedit::ErrorCode::kOutOfRange:
      return PEDIT_ERR_OUT_OF_RANGE;
  }
  return PEDIT_ERR_INTERNAL;
}

template <class F>
pedit_status guarded(F&& f) {
  try {
    f();
    return PEDIT_OK;
  } catch (const pedit::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PEDIT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PEDIT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PEDIT_ERR_INTERNAL, "unknown failure");
  }
}

#define PEDIT_REQUIRE(cond, what)                                  \
  do {                                                             \
    if (!(cond)) return fail(PEDIT_ERR_INVALID_ARGUMENT, (what));  \
  } while (0)

pedit::TextFormat to_format(pedit_format f) {
  return f == PEDIT_FORMAT_LINES ? pedit::TextFormat::kLines : pedit::TextFormat::kRaw;
}

pedit_text* make_text(std::shared_ptr<const pedit::Alphabet> alpha, pedit::Text t) {
  auto* out = new pedit_text{std::move(alpha), std::move(t), {}};
  out->bytes = out->alpha->decode(out->t.view());
  return out;
}

void check_same_alphabet(const pedit_text* x, const pedit_text* y) {
  if (x->alpha->chars() != y->alpha->chars()) {
    throw pedit::Error(pedit::ErrorCode::kInvalidArgument,
                       "the two strings were loaded with different alphabets");
  }
}

pedit_script* make_script(pedit::EditScript ops, std::shared_ptr<const pedit::Alphabet> alpha) {
  return new pedit_script{std::move(ops), std::move(alpha)};
}

void fill_detect(const pedit::DetectResult& d, pedit_detect_result* r) {
  r->estimate = d.estimate;
  r->exact = d.exact ? 1 : 0;
  r->fallback = d.fallback ? 1 : 0;
  r->detected_B = d.detected_B;
  r->inv_p_used = d.q_used;
  r->threshold = d.threshold;
  r->work_units = d.work_units;
  r->low_distance_units = d.low_distance_units;
  r->search_units = d.search_units;
  r->approx_units = d.approx_units;
  r->levels_tested = d.levels.size();
}

pedit::DetectOptions detect_options(const pedit_detect_config* c) {
  pedit::DetectOptions o;
  if (c != nullptr) {
    o.budget_coeff = c->budget_coeff;
    o.sample_coeff = c->sample_coeff;
    o.slice = c->slice;
  }
  return o;
}

}  // namespace

extern "C" {

const char* pedit_version(void) { return "0.1.0"; }

const char* pedit_last_error(void) { return g_last_error.c_str(); }

const char* pedit_status_name(pedit_status status) {
  switch (status) {
    case PEDIT_OK:
      return "ok";
    case PEDIT_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case PEDIT_ERR_GUARD:
      return "guard refusal";
    case PEDIT_ERR_IO:
      return "i/o error";
    case PEDIT_ERR_MISMATCH:
      return "mismatch";
    case PEDIT_ERR_OUT_OF_RANGE:
      return "out of range";
    case PEDIT_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown";
}

size_t pedit_warning_count(void) { return g_warnings.size(); }

const char* pedit_warning(size_t index) {
  return index < g_warnings.size() ? g_warnings[index].c_str() : nullptr;
}

// ---- alphabets and texts ----------------------------------------------------

pedit_status pedit_alphabet_new(const char* chars, pedit_alphabet** out) {
  PEDIT_REQUIRE(chars != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new pedit_alphabet{std::make_shared<const pedit::Alphabet>(std::string(chars))};
  });
}

pedit_status pedit_alphabet_standard(unsigned size, pedit_alphabet** out) {
  PEDIT_REQUIRE(out != nullptr, "null argument");
  return guarded([&] {
    *out = new pedit_alphabet{
        std::make_shared<const pedit::Alphabet>(pedit::Alphabet::standard(size))};
  });
}

pedit_status pedit_alphabet_detect_files(const char* const* paths, size_t count,
                                         pedit_format format, pedit_alphabet** out) {
  PEDIT_REQUIRE(out != nullptr && (paths != nullptr || count == 0), "null argument");
  return guarded([&] {
    std::vector<std::string> samples;
    for (size_t i = 0; i < count; ++i) {
      for (auto& s : pedit::read_strings(paths[i], to_format(format))) {
        samples.push_back(std::move(s));
      }
    }
    *out = new pedit_alphabet{
        std::make_shared<const pedit::Alphabet>(pedit::Alphabet::detect(samples))};
  });
}

size_t pedit_alphabet_size(const pedit_alphabet* a) { return a == nullptr ? 0 : a->a->size(); }

const char* pedit_alphabet_chars(const pedit_alphabet* a) {
  return a == nullptr ? "" : a->a->chars().c_str();
}

void pedit_alphabet_free(pedit_alphabet* a) { delete a; }

pedit_status pedit_text_from_bytes(const pedit_alphabet* a, const char* bytes, size_t length,
                                   pedit_text** out) {
  PEDIT_REQUIRE(a != nullptr && out != nullptr && (bytes != nullptr || length == 0),
                "null argument");
  return guarded([&] {
    *out = make_text(a->a, a->a->encode(std::string_view(bytes == nullptr ? "" : bytes, length)));
  });
}

pedit_status pedit_text_load(const pedit_alphabet* a, const char* path, pedit_format format,
                             size_t line, pedit_text** out) {
  PEDIT_REQUIRE(a != nullptr && path != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    auto strings = pedit::read_strings(path, to_format(format));
    if (line >= strings.size()) {
      throw pedit::Error(pedit::ErrorCode::kOutOfRange,
                         std::string("'") + path + "' has no string number " +
                             std::to_string(line));
    }
    try {
      *out = make_text(a->a, a->a->encode(strings[line]));
    } catch (const pedit::Error& e) {
      throw pedit::Error(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

pedit_status pedit_file_string_count(const char* path, pedit_format format, size_t* count) {
  PEDIT_REQUIRE(path != nullptr && count != nullptr, "null argument");
  return guarded([&] { *count = pedit::read_strings(path, to_format(format)).size(); });
}

pedit_status pedit_text_save(const pedit_text* t, const char* path) {
  PEDIT_REQUIRE(t != nullptr && path != nullptr, "null argument");
  return guarded([&] { pedit::write_string(path, t->bytes); });
}

size_t pedit_text_length(const pedit_text* t) { return t == nullptr ? 0 : t->t.size(); }

const char* pedit_text_bytes(const pedit_text* t) { return t == nullptr ? "" : t->bytes.c_str(); }

uint64_t pedit_text_checksum(const pedit_text* t) { return t == nullptr ? 0 : t->t.checksum(); }

void pedit_text_free(pedit_text* t) { delete t; }

// ---- scripts ----------------------------------------------------------------

size_t pedit_script_length(const pedit_script* s) { return s == nullptr ? 0 : s->ops.size(); }

pedit_status pedit_script_op(const pedit_script* s, size_t index, char* kind, size_t* pos,
                             char* symbol) {
  PEDIT_REQUIRE(s != nullptr, "null argument");
  if (index >= s->ops.size()) {
    return fail(PEDIT_ERR_OUT_OF_RANGE, "script has no op " + std::to_string(index));
  }
  const pedit::EditOp& op = s->ops[index];
  if (kind != nullptr) {
    *kind = op.kind == pedit::EditKind::kDelete   ? 'D'
            : op.kind == pedit::EditKind::kInsert ? 'I'
                                                  : 'S';
  }
  if (pos != nullptr) *pos = op.pos;
  if (symbol != nullptr) {
    *symbol = op.kind == pedit::EditKind::kDelete ? '\0' : s->alpha->to_char(op.symbol);
  }
  return PEDIT_OK;
}

pedit_status pedit_script_apply(const pedit_script* s, const pedit_text* source,
                                pedit_text** out) {
  PEDIT_REQUIRE(s != nullptr && source != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = make_text(source->alpha, pedit::apply_script(source->t, s->ops)); });
}

pedit_status pedit_script_save(const pedit_script* s, const char* path) {
  PEDIT_REQUIRE(s != nullptr && path != nullptr, "null argument");
  return guarded([&] {
    const std::string body = pedit::format_script(s->ops, *s->alpha);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw pedit::Error(pedit::ErrorCode::kIo, std::string("cannot write '") + path + "'");
    f << body;
    if (!f) throw pedit::Error(pedit::ErrorCode::kIo, std::string("write error on '") + path + "'");
  });
}

void pedit_script_free(pedit_script* s) { delete s; }

// ---- distances --------------------------------------------------------------

pedit_status pedit_ed_exact(const pedit_text* u, const pedit_text* v, int force,
                            uint64_t* distance, pedit_script** script, uint64_t* work_units) {
  PEDIT_REQUIRE(u != nullptr && v != nullptr && distance != nullptr, "null argument");
  return guarded([&] {
    check_same_alphabet(u, v);
    const uint64_t cells = static_cast<uint64_t>(u->t.size()) * v->t.size();
    if (cells > PEDIT_EXACT_CELL_LIMIT && force == 0) {
      throw pedit::Error(pedit::ErrorCode::kGuardRefusal,
                         "exact DP over " + std::to_string(cells) +
                             " cells exceeds the guard; use force");
    }
    pedit::WorkMeter m;
    if (script != nullptr) {
      pedit::DistanceWithScript d = pedit::ed_exact_script(u->t, v->t, &m);
      *distance = d.distance;
      *script = make_script(std::move(d.script), u->alpha);
    } else {
      *distance = pedit::ed_exact(u->t, v->t, &m);
    }
    if (work_units != nullptr) *work_units = m.units();
  });
}

pedit_status pedit_ed_bounded(const pedit_text* u, const pedit_text* v, uint64_t k, int* within,
                              uint64_t* distance, uint64_t* work_units) {
  PEDIT_REQUIRE(u != nullptr && v != nullptr && within != nullptr, "null argument");
  return guarded([&] {
    check_same_alphabet(u, v);
    pedit::WorkMeter m;
    const auto d = pedit::ed_bounded(u->t, v->t, k, &m);
    *within = d.has_value() ? 1 : 0;
    if (distance != nullptr) *distance = d.value_or(0);
    if (work_units != nullptr) *work_units = m.units();
  });
}

pedit_status pedit_parse_p(const char* text, uint64_t* inv_p) {
  PEDIT_REQUIRE(text != nullptr && inv_p != nullptr, "null argument");
  return guarded([&] { *inv_p = pedit::parse_inverse_p(text); });
}

void pedit_approx_config_default(pedit_approx_config* c) {
  if (c == nullptr) return;
  c->inv_p = 4;
  c->B = 16;
  c->repetitions = 0;
  c->attempts_coeff = 100;
  c->interpolate_gaps = 1;
  c->merge_substitutions = 1;
  c->seed = 0;
}

pedit_status pedit_approx(const pedit_text* x, const pedit_text* y,
                          const pedit_approx_config* config, pedit_approx_result* result,
                          pedit_script** script) {
  PEDIT_REQUIRE(x != nullptr && y != nullptr && config != nullptr && result != nullptr,
                "null argument");
  PEDIT_REQUIRE(config->attempts_coeff >= 1, "attempts_coeff must be at least 1");
  return guarded([&] {
    check_same_alphabet(x, y);
    g_warnings.clear();
    const pedit::PseudoParams params = pedit::PseudoParams::make(config->inv_p, config->B);
    pedit::ApproxOptions o;
    o.repetitions = config->repetitions;
    o.attempts_coeff = config->attempts_coeff;
    o.interpolate_gaps = config->interpolate_gaps != 0;
    o.merge_substitutions = config->merge_substitutions != 0;
    pedit::ApproxResult a = pedit::approx_ed(x->t, y->t, params, pedit::Rng(config->seed), o);
    result->estimate = a.estimate;
    result->repetitions = a.repetitions;
    result->work_units = a.work_units;
    result->oracle_evaluations = a.oracle_evaluations;
    result->trivial = a.trivial ? 1 : 0;
    result->inv_p_used = a.params.q;
    result->clamped = a.params.clamped ? 1 : 0;
    g_warnings = a.warnings;
    if (script != nullptr) *script = make_script(std::move(a.script), x->alpha);
  });
}

// ---- clean alignment --------------------------------------------------------

pedit_status pedit_clean_align_file(const char* path, uint64_t seed, uint32_t attempts_coeff,
                                    int brute_force, pedit_clean_result* result,
                                    pedit_alignment** alignment) {
  PEDIT_REQUIRE(path != nullptr && result != nullptr, "null argument");
  PEDIT_REQUIRE(attempts_coeff >= 1, "attempts_coeff must be at least 1");
  return guarded([&] {
    std::vector<std::vector<bool>> matrix;
    const auto lines = pedit::read_strings(path, pedit::TextFormat::kLines);
    for (size_t ln = 0; ln < lines.size(); ++ln) {
      std::vector<bool> row;
      for (char c : lines[ln]) {
        if (c == '0' || c == '1') {
          row.push_back(c == '1');
        } else if (c != ' ' && c != '\t' && c != ',') {
          throw pedit::Error(pedit::ErrorCode::kInvalidArgument,
                             std::string(path) + ":" + std::to_string(ln + 1) +
                                 ": unexpected character '" + c + "' in 0/1 matrix");
        }
      }
      if (!row.empty()) matrix.push_back(std::move(row));
    }
    pedit::MatchOracle f = pedit::MatchOracle::from_matrix(matrix);
    pedit::Rng rng(seed);
    const pedit::BlockAlignment ba = pedit::solve_clean_alignment(f, rng, attempts_coeff);
    const pedit::CleanCost c = pedit::alignment_cost(ba.pairs, f.u_len(), f.v_len());
    result->u_len = f.u_len();
    result->v_len = f.v_len();
    result->x_portion = c.x_portion;
    result->y_portion = c.y_portion;
    result->total = c.total();
    result->evaluations = f.evaluations();
    result->queries = f.queries();
    result->has_optimum = 0;
    result->optimum_total = 0;
    if (brute_force != 0 && f.u_len() <= pedit::kCleanOracleLimit &&
        f.v_len() <= pedit::kCleanOracleLimit) {
      pedit::MatchOracle g = pedit::MatchOracle::from_matrix(matrix);
      result->has_optimum = 1;
      result->optimum_total = pedit::brute_force_clean_opt(g).cost.total();
    }
    if (alignment != nullptr) *alignment = new pedit_alignment{ba.pairs};
  });
}

size_t pedit_alignment_length(const pedit_alignment* a) {
  return a == nullptr ? 0 : a->pairs.size();
}

pedit_status pedit_alignment_pair(const pedit_alignment* a, size_t index, size_t* i, size_t* j) {
  PEDIT_REQUIRE(a != nullptr, "null argument");
  if (index >= a->pairs.size()) {
    return fail(PEDIT_ERR_OUT_OF_RANGE, "alignment has no pair " + std::to_string(index));
  }
  if (i != nullptr) *i = a->pairs[index].x;
  if (j != nullptr) *j = a->pairs[index].y;
  return PEDIT_OK;
}

void pedit_alignment_free(pedit_alignment* a) { delete a; }

// ---- audit ------------------------------------------------------------------

size_t pedit_block_count(size_t n, size_t B) {
  if (B == 0) return 0;
  const size_t unit = 6 * B;
  return std::max<size_t>(1, (n + unit - 1) / unit);
}

pedit_status pedit_audit_exact(const pedit_text* x, uint64_t inv_p, size_t B, int force,
                               pedit_audit_result* result, uint8_t* flags) {
  PEDIT_REQUIRE(x != nullptr && result != nullptr, "null argument");
  return guarded([&] {
    const pedit::PseudoParams params = pedit::PseudoParams::make(inv_p, B);
    const pedit::AuditReport r = pedit::m_exact(x->t, params, force != 0);
    *result = pedit_audit_result{};
    result->exact = 1;
    result->n = r.n;
    result->padded_length = r.padded_length;
    result->blocks = r.blocks;
    result->m_value = r.m_value;
    result->work_units = r.work_units;
    if (flags != nullptr) {
      for (size_t i = 0; i < r.blocks; ++i) flags[i] = r.block_unique[i] ? 1 : 0;
    }
  });
}

pedit_status pedit_audit_sampled(const pedit_text* x, uint64_t inv_p, size_t B, double threshold,
                                 uint64_t seed, double coeff, pedit_audit_result* result) {
  PEDIT_REQUIRE(x != nullptr && result != nullptr, "null argument");
  return guarded([&] {
    const pedit::PseudoParams params = pedit::PseudoParams::make(inv_p, B);
    const pedit::AuditReport r =
        pedit::sampled_m_test(x->t, params, threshold, pedit::Rng(seed), coeff);
    *result = pedit_audit_result{};
    result->exact = 0;
    result->n = r.n;
    result->padded_length = r.padded_length;
    result->blocks = r.blocks;
    result->verdict = r.verdict ? 1 : 0;
    result->threshold = r.threshold;
    result->coeff = r.coeff;
    result->failure_bound = r.failure_bound;
    result->sample_size = r.sample_size;
    result->samples_drawn = r.samples_drawn;
    result->failures = r.failures;
    result->work_units = r.work_units;
  });
}

// ---- detection --------------------------------------------------------------

void pedit_detect_config_default(pedit_detect_config* c) {
  if (c == nullptr) return;
  const pedit::DetectOptions o;
  c->budget_coeff = o.budget_coeff;
  c->sample_coeff = o.sample_coeff;
  c->slice = o.slice;
  c->seed = 0;
}

pedit_status pedit_detect(const pedit_text* x, const pedit_text* y, uint64_t alpha,
                          const pedit_detect_config* config, pedit_detect_result* result,
                          pedit_script** script) {
  PEDIT_REQUIRE(x != nullptr && y != nullptr && result != nullptr, "null argument");
  return guarded([&] {
    check_same_alphabet(x, y);
    g_warnings.clear();
    pedit::DetectResult d = pedit::detect_single_shot(
        x->t, y->t, alpha, pedit::Rng(config != nullptr ? config->seed : 0),
        detect_options(config));
    fill_detect(d, result);
    g_warnings = d.warnings;
    if (script != nullptr) *script = make_script(std::move(d.script), x->alpha);
  });
}

pedit_status pedit_preprocess(const pedit_text* x, uint64_t alpha, uint64_t seed,
                              double sample_coeff, pedit_profile** out) {
  PEDIT_REQUIRE(x != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    auto* p = new pedit_profile{pedit::preprocess_source(x->t, alpha, pedit::Rng(seed),
                                                         sample_coeff),
                                {}};
    p->json = p->p.to_json();
    *out = p;
  });
}

pedit_status pedit_query(const pedit_profile* profile, const pedit_text* x, const pedit_text* y,
                         const pedit_detect_config* config, pedit_detect_result* result,
                         pedit_script** script) {
  PEDIT_REQUIRE(profile != nullptr && x != nullptr && y != nullptr && result != nullptr,
                "null argument");
  return guarded([&] {
    check_same_alphabet(x, y);
    g_warnings.clear();
    pedit::DetectResult d =
        pedit::query_source(profile->p, x->t, y->t,
                            pedit::Rng(config != nullptr ? config->seed : 0),
                            detect_options(config));
    fill_detect(d, result);
    g_warnings = d.warnings;
    if (script != nullptr) *script = make_script(std::move(d.script), x->alpha);
  });
}

pedit_status pedit_profile_save(const pedit_profile* p, const char* path) {
  PEDIT_REQUIRE(p != nullptr && path != nullptr, "null argument");
  return guarded([&] { p->p.save(path); });
}

pedit_status pedit_profile_load(const char* path, pedit_profile** out) {
  PEDIT_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    auto* p = new pedit_profile{pedit::SourceProfile::load(path), {}};
    p->json = p->p.to_json();
    *out = p;
  });
}

const char* pedit_profile_json(const pedit_profile* p) { return p == nullptr ? "" : p->json.c_str(); }

size_t pedit_profile_detected_B(const pedit_profile* p) {
  return p == nullptr ? 0 : p->p.detected_B;
}

int pedit_profile_fallback(const pedit_profile* p) {
  return p != nullptr && p->p.fallback ? 1 : 0;
}

void pedit_profile_free(pedit_profile* p) { delete p; }

// ---- generation and benchmarks ----------------------------------------------

void pedit_gen_spec_default(pedit_gen_spec* spec) {
  if (spec == nullptr) return;
  const pedit::GenSpec g;
  spec->kind = "uniform";
  spec->n = 0;
  spec->alphabet_size = g.alphabet;
  spec->seed = 0;
  spec->k = 0;
  spec->p_perturb = g.p_perturb;
  spec->period = g.period;
  spec->scale = g.scale;
  spec->fraction = g.fraction;
}

pedit_status pedit_generate(const pedit_gen_spec* spec, pedit_text** x, pedit_text** y) {
  PEDIT_REQUIRE(spec != nullptr && spec->kind != nullptr && x != nullptr, "null argument");
  return guarded([&] {
    pedit::GenSpec g;
    g.kind = pedit::parse_gen_kind(spec->kind);
    g.n = spec->n;
    g.alphabet = spec->alphabet_size;
    g.seed = spec->seed;
    g.k = spec->k;
    g.p_perturb = spec->p_perturb;
    g.period = spec->period;
    g.scale = spec->scale;
    g.fraction = spec->fraction;
    pedit::Generated out = pedit::generate(g);
    auto alpha = std::make_shared<const pedit::Alphabet>(pedit::Alphabet::standard(g.alphabet));
    std::unique_ptr<pedit_text> tx(make_text(alpha, std::move(out.x)));
    std::unique_ptr<pedit_text> ty;
    if (out.y) ty.reset(make_text(alpha, std::move(*out.y)));
    *x = tx.release();
    if (y != nullptr) {
      *y = ty.release();
    }
  });
}

pedit_status pedit_bench_run(const char* config_path, unsigned jobs, int force,
                             const char* csv_path, const char* jsonl_path, size_t* records) {
  PEDIT_REQUIRE(config_path != nullptr && csv_path != nullptr && jsonl_path != nullptr,
                "null argument");
  return guarded([&] {
    const pedit::BenchConfig cfg = pedit::load_bench_config(config_path);
    const auto recs = pedit::run_bench(cfg, jobs, force != 0);
    pedit::write_bench_csv(csv_path, recs);
    pedit::write_bench_jsonl(jsonl_path, recs);
    if (records != nullptr) *records = recs.size();
  });
}

}  // extern "C"
