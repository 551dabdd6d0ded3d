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

// Command-line front end. Talks to the library only through pedit/pedit.h.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pedit/pedit.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(pedit_status s) {
  switch (s) {
    case PEDIT_OK:
      return kExitOk;
    case PEDIT_ERR_GUARD:
      return kExitGuard;
    case PEDIT_ERR_INVALID_ARGUMENT:
    case PEDIT_ERR_IO:
    case PEDIT_ERR_MISMATCH:
    case PEDIT_ERR_OUT_OF_RANGE:
      return kExitInput;
    default:
      return kExitOther;
  }
}

void check(pedit_status s) {
  if (s != PEDIT_OK) throw Failure{exit_code_for(s), pedit_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Alphabet = std::unique_ptr<pedit_alphabet, Deleter<pedit_alphabet, pedit_alphabet_free>>;
using TextPtr = std::unique_ptr<pedit_text, Deleter<pedit_text, pedit_text_free>>;
using Script = std::unique_ptr<pedit_script, Deleter<pedit_script, pedit_script_free>>;
using Profile = std::unique_ptr<pedit_profile, Deleter<pedit_profile, pedit_profile_free>>;
using AlignmentPtr =
    std::unique_ptr<pedit_alignment, Deleter<pedit_alignment, pedit_alignment_free>>;

struct Globals {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool json = false;
  bool force = false;
  std::string alphabet;
  std::string format = "raw";
};

pedit_format format_of(const Globals& g) {
  return g.format == "lines" ? PEDIT_FORMAT_LINES : PEDIT_FORMAT_RAW;
}

// Prints either one JSON object or "key: value" lines.
void emit(const Globals& g, const json& out) {
  if (g.json) {
    std::cout << out.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : out.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
  }
}

json warnings_json() {
  json w = json::array();
  for (size_t i = 0; i < pedit_warning_count(); ++i) w.push_back(pedit_warning(i));
  return w;
}

void print_warnings() {
  for (size_t i = 0; i < pedit_warning_count(); ++i) {
    std::cerr << "warning: " << pedit_warning(i) << "\n";
  }
}

Alphabet load_alphabet(const Globals& g, const std::vector<std::string>& files) {
  pedit_alphabet* a = nullptr;
  if (!g.alphabet.empty()) {
    check(pedit_alphabet_new(g.alphabet.c_str(), &a));
  } else {
    std::vector<const char*> paths;
    for (const auto& f : files) paths.push_back(f.c_str());
    check(pedit_alphabet_detect_files(paths.data(), paths.size(), format_of(g), &a));
  }
  return Alphabet(a);
}

TextPtr load_text(const Globals& g, const pedit_alphabet* a, const std::string& path,
                  size_t line) {
  pedit_text* t = nullptr;
  check(pedit_text_load(a, path.c_str(), format_of(g), line, &t));
  return TextPtr(t);
}

// x from --x; y from --y, or from the second line of the x file in lines mode.
std::pair<TextPtr, TextPtr> load_pair(const Globals& g, const pedit_alphabet* a,
                                      const std::string& x_path, const std::string& y_path) {
  TextPtr x = load_text(g, a, x_path, 0);
  if (!y_path.empty()) return {std::move(x), load_text(g, a, y_path, 0)};
  if (format_of(g) != PEDIT_FORMAT_LINES) {
    throw Failure{kExitInput, "--y is required unless --format lines supplies both strings"};
  }
  return {std::move(x), load_text(g, a, x_path, 1)};
}

std::vector<std::string> input_files(const std::string& x, const std::string& y) {
  std::vector<std::string> out{x};
  if (!y.empty()) out.push_back(y);
  return out;
}

bool script_reproduces(const pedit_script* s, const pedit_text* x, const pedit_text* y) {
  pedit_text* out = nullptr;
  if (pedit_script_apply(s, x, &out) != PEDIT_OK) return false;
  TextPtr holder(out);
  return std::string(pedit_text_bytes(out)) == pedit_text_bytes(y);
}

void maybe_save_script(const pedit_script* s, const std::string& path) {
  if (!path.empty()) check(pedit_script_save(s, path.c_str()));
}

json detect_json(const pedit_detect_result& r, bool checked, const Globals& g) {
  return json{{"estimate", r.estimate},
              {"exact", r.exact != 0},
              {"fallback", r.fallback != 0},
              {"exact_lower_bound_checked", checked},
              {"detected_B", r.detected_B},
              {"p_used", "1/" + std::to_string(r.inv_p_used)},
              {"threshold", r.threshold},
              {"levels_tested", r.levels_tested},
              {"low_distance_units", r.low_distance_units},
              {"search_units", r.search_units},
              {"approx_units", r.approx_units},
              {"work_units", r.work_units},
              {"seed", g.seed},
              {"warnings", warnings_json()}};
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  CLI::App app{"pedit: edit distance for pseudorandom strings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for bench")->capture_default_str();
  app.add_flag("--json", g.json, "Print JSON instead of key: value lines");
  app.add_flag("--force", g.force, "Run quadratic oracles above their size guards");
  app.add_option("--alphabet", g.alphabet, "Alphabet characters (default: detected from inputs)");
  app.add_option("--format", g.format, "Input format")
      ->check(CLI::IsMember({"raw", "lines"}))
      ->capture_default_str();

  // exact
  std::string x_path, y_path, script_out;
  auto* exact = app.add_subcommand("exact", "Exact edit distance by dynamic programming");
  exact->add_option("--x", x_path)->required();
  exact->add_option("--y", y_path);
  exact->add_option("--emit-script", script_out, "Write the edit script here");

  // approx
  std::string p_text = "1/4";
  size_t B = 16;
  uint32_t reps = 0, attempts = 100;
  bool no_interpolate = false, indel_only = false;
  auto* approx = app.add_subcommand("approx", "Approximate edit distance by block reduction");
  approx->add_option("--x", x_path)->required();
  approx->add_option("--y", y_path);
  approx->add_option("--p", p_text, "p as 1/q, q a power of two")->capture_default_str();
  approx->add_option("--B", B, "Block size")->capture_default_str();
  approx->add_option("--reps", reps, "Repetitions (0: ceil(log2 n))")->capture_default_str();
  approx->add_option("--attempts", attempts, "Pivot attempts coefficient")->capture_default_str();
  approx->add_flag("--no-interpolate", no_interpolate,
                   "Only use candidate edges near matched blocks");
  approx->add_flag("--indel-only", indel_only, "Do not merge deletions and insertions");
  approx->add_option("--emit-script", script_out);

  // clean-align
  std::string matrix_path;
  bool optimum = false;
  auto* clean = app.add_subcommand("clean-align", "Clean alignment over an explicit 0/1 matrix");
  clean->add_option("--matrix", matrix_path)->required();
  clean->add_option("--attempts", attempts)->capture_default_str();
  clean->add_flag("--optimum", optimum, "Also compute the exhaustive optimum (sides <= 64)");

  // audit
  bool audit_exact = false, audit_sampled = false;
  double threshold = 0, coeff = 8.0;
  auto* audit = app.add_subcommand("audit", "Audit block uniqueness of x");
  audit->add_option("--x", x_path)->required();
  audit->add_option("--p", p_text)->capture_default_str();
  audit->add_option("--B", B)->capture_default_str();
  auto* ex_flag = audit->add_flag("--exact", audit_exact, "Exact M(x) (quadratic, guarded)");
  auto* sa_flag = audit->add_flag("--sampled", audit_sampled, "Sampled test");
  ex_flag->excludes(sa_flag);
  audit->add_option("--threshold", threshold, "Sampling threshold n^eps");
  audit->add_option("--coeff", coeff, "Sample coefficient")->capture_default_str();

  // detect
  std::uint64_t alpha = 4;
  double budget_coeff = 4.0;
  auto* detect = app.add_subcommand("detect", "Single-shot approximation without knowing B");
  detect->add_option("--x", x_path)->required();
  detect->add_option("--y", y_path);
  detect->add_option("--alpha", alpha)->capture_default_str();
  detect->add_option("--budget-coeff", budget_coeff)->capture_default_str();
  detect->add_option("--emit-script", script_out);

  // preprocess / query
  std::string profile_path;
  auto* preprocess = app.add_subcommand("preprocess", "Detect B for a source string");
  preprocess->add_option("--x", x_path)->required();
  preprocess->add_option("--alpha", alpha)->capture_default_str();
  preprocess->add_option("--coeff", coeff)->capture_default_str();
  preprocess->add_option("--out", profile_path)->required();

  auto* query = app.add_subcommand("query", "Approximate ed(x, y) with a stored profile");
  query->add_option("--profile", profile_path)->required();
  query->add_option("--x", x_path)->required();
  query->add_option("--y", y_path);
  query->add_option("--budget-coeff", budget_coeff)->capture_default_str();
  query->add_option("--emit-script", script_out);

  // gen
  pedit_gen_spec spec;
  pedit_gen_spec_default(&spec);
  std::string kind = "uniform", out_x, out_y;
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->add_option("--kind", kind)
      ->check(CLI::IsMember({"uniform", "edits-from-x", "smoothed", "planted-duplicates"}))
      ->capture_default_str();
  gen->add_option("--n", spec.n)->required();
  gen->add_option("--alphabet-size", spec.alphabet_size)->capture_default_str();
  gen->add_option("--k", spec.k, "Edits (edits-from-x)");
  gen->add_option("--p-perturb", spec.p_perturb, "Perturbation probability (smoothed)");
  gen->add_option("--period", spec.period, "Base period (smoothed)");
  gen->add_option("--scale", spec.scale, "Block scale (planted-duplicates)");
  gen->add_option("--fraction", spec.fraction, "Share of blocks copied (planted-duplicates)");
  gen->add_option("--out-x", out_x)->required();
  gen->add_option("--out-y", out_y);

  // bench
  std::string config_path, csv_path, jsonl_path;
  auto* bench = app.add_subcommand("bench", "Run a benchmark matrix");
  bench->add_option("--config", config_path)->required();
  bench->add_option("--csv", csv_path)->required();
  bench->add_option("--jsonl", jsonl_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (exact->parsed()) {
      Alphabet a = load_alphabet(g, input_files(x_path, y_path));
      auto [x, y] = load_pair(g, a.get(), x_path, y_path);
      std::uint64_t d = 0, units = 0;
      pedit_script* s = nullptr;
      check(pedit_ed_exact(x.get(), y.get(), g.force ? 1 : 0, &d,
                           script_out.empty() ? nullptr : &s, &units));
      Script script(s);
      if (script) maybe_save_script(script.get(), script_out);
      emit(g, json{{"distance", d}, {"work_units", units}});
    } else if (approx->parsed()) {
      Alphabet a = load_alphabet(g, input_files(x_path, y_path));
      auto [x, y] = load_pair(g, a.get(), x_path, y_path);
      pedit_approx_config cfg;
      pedit_approx_config_default(&cfg);
      check(pedit_parse_p(p_text.c_str(), &cfg.inv_p));
      cfg.B = B;
      cfg.repetitions = reps;
      cfg.attempts_coeff = attempts;
      cfg.interpolate_gaps = no_interpolate ? 0 : 1;
      cfg.merge_substitutions = indel_only ? 0 : 1;
      cfg.seed = g.seed;
      pedit_approx_result r;
      pedit_script* s = nullptr;
      check(pedit_approx(x.get(), y.get(), &cfg, &r, &s));
      Script script(s);
      print_warnings();
      const bool checked = script_reproduces(script.get(), x.get(), y.get());
      maybe_save_script(script.get(), script_out);
      emit(g, json{{"estimate", r.estimate},
                   {"exact_lower_bound_checked", checked},
                   {"reps", r.repetitions},
                   {"seed", g.seed},
                   {"work_units", r.work_units},
                   {"p_used", "1/" + std::to_string(r.inv_p_used)},
                   {"B", B},
                   {"trivial", r.trivial != 0},
                   {"oracle_evaluations", r.oracle_evaluations}});
      if (!checked) return kExitOther;
    } else if (clean->parsed()) {
      pedit_clean_result r;
      pedit_alignment* al = nullptr;
      check(pedit_clean_align_file(matrix_path.c_str(), g.seed, attempts, optimum ? 1 : 0, &r,
                                   &al));
      AlignmentPtr alignment(al);
      json pairs = json::array();
      for (size_t k = 0; k < pedit_alignment_length(al); ++k) {
        size_t i = 0, j = 0;
        check(pedit_alignment_pair(al, k, &i, &j));
        pairs.push_back({i, j});
      }
      json out{{"u_len", r.u_len},     {"v_len", r.v_len},
               {"pairs", pairs},       {"x_portion", r.x_portion},
               {"y_portion", r.y_portion}, {"total", r.total},
               {"evaluations", r.evaluations}, {"seed", g.seed}};
      if (r.has_optimum) out["optimum_total"] = r.optimum_total;
      emit(g, out);
    } else if (audit->parsed()) {
      if (!audit_exact && !audit_sampled) audit_exact = true;
      Alphabet a = load_alphabet(g, {x_path});
      TextPtr x = load_text(g, a.get(), x_path, 0);
      std::uint64_t q = 0;
      check(pedit_parse_p(p_text.c_str(), &q));
      pedit_audit_result r;
      if (audit_exact) {
        std::vector<uint8_t> flags(pedit_block_count(pedit_text_length(x.get()), B));
        check(pedit_audit_exact(x.get(), q, B, g.force ? 1 : 0, &r, flags.data()));
        json unique = json::array();
        for (uint8_t f : flags) unique.push_back(f != 0);
        emit(g, json{{"mode", "exact"},   {"p", "1/" + std::to_string(q)},
                     {"B", B},             {"n", r.n},
                     {"padded_length", r.padded_length}, {"blocks", r.blocks},
                     {"m_value", r.m_value}, {"block_unique", unique},
                     {"work_units", r.work_units}});
      } else {
        if (!(threshold > 0)) throw Failure{kExitInput, "--sampled needs --threshold > 0"};
        check(pedit_audit_sampled(x.get(), q, B, threshold, g.seed, coeff, &r));
        emit(g, json{{"mode", "sampled"},
                     {"p", "1/" + std::to_string(q)},
                     {"B", B},
                     {"n", r.n},
                     {"blocks", r.blocks},
                     {"verdict", r.verdict != 0},
                     {"threshold", r.threshold},
                     {"coeff", r.coeff},
                     {"sample_size", r.sample_size},
                     {"samples_drawn", r.samples_drawn},
                     {"failures", r.failures},
                     {"failure_bound", r.failure_bound},
                     {"seed", g.seed},
                     {"work_units", r.work_units}});
      }
    } else if (detect->parsed()) {
      Alphabet a = load_alphabet(g, input_files(x_path, y_path));
      auto [x, y] = load_pair(g, a.get(), x_path, y_path);
      pedit_detect_config cfg;
      pedit_detect_config_default(&cfg);
      cfg.budget_coeff = budget_coeff;
      cfg.seed = g.seed;
      pedit_detect_result r;
      pedit_script* s = nullptr;
      check(pedit_detect(x.get(), y.get(), alpha, &cfg, &r, &s));
      Script script(s);
      print_warnings();
      const bool checked = script_reproduces(script.get(), x.get(), y.get());
      maybe_save_script(script.get(), script_out);
      emit(g, detect_json(r, checked, g));
      if (!checked) return kExitOther;
    } else if (preprocess->parsed()) {
      Alphabet a = load_alphabet(g, {x_path});
      TextPtr x = load_text(g, a.get(), x_path, 0);
      pedit_profile* p = nullptr;
      check(pedit_preprocess(x.get(), alpha, g.seed, coeff, &p));
      Profile profile(p);
      check(pedit_profile_save(p, profile_path.c_str()));
      if (g.json) {
        std::cout << json::parse(pedit_profile_json(p)).dump() << "\n";
      } else {
        emit(g, json{{"detected_B", pedit_profile_detected_B(p)},
                     {"fallback", pedit_profile_fallback(p) != 0},
                     {"profile", profile_path}});
      }
    } else if (query->parsed()) {
      pedit_profile* p = nullptr;
      check(pedit_profile_load(profile_path.c_str(), &p));
      Profile profile(p);
      Alphabet a = load_alphabet(g, input_files(x_path, y_path));
      auto [x, y] = load_pair(g, a.get(), x_path, y_path);
      pedit_detect_config cfg;
      pedit_detect_config_default(&cfg);
      cfg.budget_coeff = budget_coeff;
      cfg.seed = g.seed;
      pedit_detect_result r;
      pedit_script* s = nullptr;
      check(pedit_query(p, x.get(), y.get(), &cfg, &r, &s));
      Script script(s);
      print_warnings();
      const bool checked = script_reproduces(script.get(), x.get(), y.get());
      maybe_save_script(script.get(), script_out);
      emit(g, detect_json(r, checked, g));
      if (!checked) return kExitOther;
    } else if (gen->parsed()) {
      spec.kind = kind.c_str();
      spec.seed = g.seed;
      pedit_text* x = nullptr;
      pedit_text* y = nullptr;
      check(pedit_generate(&spec, &x, &y));
      TextPtr tx(x), ty(y);
      check(pedit_text_save(x, out_x.c_str()));
      if (y != nullptr) {
        if (out_y.empty()) throw Failure{kExitInput, "--kind edits-from-x needs --out-y"};
        check(pedit_text_save(y, out_y.c_str()));
      }
      json out{{"kind", kind}, {"n", pedit_text_length(x)}, {"seed", g.seed}, {"x", out_x}};
      if (y != nullptr) out["y"] = out_y;
      emit(g, out);
    } else if (bench->parsed()) {
      size_t records = 0;
      check(pedit_bench_run(config_path.c_str(), g.jobs, g.force ? 1 : 0, csv_path.c_str(),
                            jsonl_path.c_str(), &records));
      emit(g, json{{"records", records}, {"csv", csv_path}, {"jsonl", jsonl_path}});
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOk;
}
