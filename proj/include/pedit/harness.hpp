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

#ifndef PEDIT_HARNESS_HPP
#define PEDIT_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pedit/rng.hpp"
#include "pedit/text.hpp"

namespace pedit {

enum class GenKind {
  kUniform,            // i.i.d. uniform letters
  kEditsFromX,         // uniform x, y = x after k random edits
  kSmoothed,           // periodic base, each letter redrawn with probability p_perturb
  kPlantedDuplicates,  // uniform x with a fraction of its scale-blocks overwritten by copies
};

struct GenSpec {
  GenKind kind = GenKind::kUniform;
  std::size_t n = 0;
  unsigned alphabet = 4;
  std::uint64_t seed = 0;
  std::size_t k = 0;            // edits-from-x
  double p_perturb = 0.1;       // smoothed
  std::size_t period = 16;      // smoothed
  std::size_t scale = 16;       // planted-duplicates: blocks of 6 * scale letters
  double fraction = 0.05;       // planted-duplicates: share of blocks overwritten
};

struct Generated {
  Text x;
  std::optional<Text> y;
};

std::string to_string(GenKind kind);
GenKind parse_gen_kind(const std::string& name);

/// Pure function of the spec. Throws kInvalidArgument on an invalid spec.
Generated generate(const GenSpec& spec);

/// Applies exactly k edits with uniformly chosen kinds at uniform positions
/// (substitutions always change the letter).
Text random_edits(const Text& x, std::size_t k, Rng& rng);

/// Overwrites round(fraction * blocks), at least one, of the 6 * scale
/// blocks of x with copies of other blocks. Returns the number overwritten.
std::size_t plant_duplicates(std::vector<Symbol>& x, std::size_t scale, double fraction,
                             Rng& rng);

struct BenchCell {
  std::string id;
  GenSpec gen;
  std::string algorithm = "approx";  // approx | detect | preprocess-query | exact
  std::uint64_t q = 4;               // approx: 1/p
  std::size_t B = 16;                // approx
  std::uint64_t alpha = 4;           // detect, preprocess-query
  std::uint32_t reps = 0;
};

struct BenchConfig {
  std::vector<BenchCell> cells;
  std::vector<std::uint64_t> seeds;
  bool exact_oracle = true;
};

struct BenchRecord {
  std::string cell;
  std::uint64_t seed = 0;
  std::string kind;
  std::string algorithm;
  std::size_t n = 0;
  std::string params;
  std::optional<std::uint64_t> true_distance;
  std::uint64_t estimate = 0;
  std::optional<double> ratio;
  std::uint64_t work_units = 0;
  double wall_ms = 0;
};

inline constexpr int kBenchSchemaVersion = 1;
/// Largest |x| * |y| the bench computes the exact distance for without force.
inline constexpr std::uint64_t kBenchExactCellLimit = std::uint64_t{1} << 28;

BenchConfig parse_bench_config(const std::string& json_text);
BenchConfig load_bench_config(const std::string& path);

/// Runs every (cell, seed) pair on up to `jobs` threads and returns the
/// records sorted by cell id, then seed.
std::vector<BenchRecord> run_bench(const BenchConfig& config, unsigned jobs, bool force);

/// CSV with a header row (written even when there are no records) and one
/// JSON object per line. Throws kIo naming the file on failure.
void write_bench_csv(const std::string& path, const std::vector<BenchRecord>& records);
void write_bench_jsonl(const std::string& path, const std::vector<BenchRecord>& records);

}  // namespace pedit

#endif  // PEDIT_HARNESS_HPP
