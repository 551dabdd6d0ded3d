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

#ifndef PEDIT_PARAM_DETECT_HPP
#define PEDIT_PARAM_DETECT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pedit/block_reduction.hpp"
#include "pedit/edit_script.hpp"
#include "pedit/rng.hpp"
#include "pedit/text.hpp"

namespace pedit {

/// One level of the doubling search over B = alpha * 2^i.
struct LevelAudit {
  std::size_t B = 0;
  double threshold = 0;
  bool finished = false;  // false when the race ended during this level
  bool accepted = false;
  std::uint64_t samples_drawn = 0;
  std::uint64_t failures = 0;
  std::uint64_t units = 0;
};

struct SourceProfile {
  static constexpr int kSchemaVersion = 1;

  std::uint64_t alpha = 0;
  std::size_t detected_B = 0;  // 0 when no level was accepted
  std::uint64_t q_used = 0;    // 1/p with p = 2/alpha
  double threshold = 0;        // sampling threshold at the accepted level
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::uint64_t checksum = 0;  // Text::checksum of the source
  bool fallback = false;
  double sample_coeff = 8.0;
  std::vector<LevelAudit> levels;

  std::string to_json() const;
  static SourceProfile from_json(const std::string& text);
  void save(const std::string& path) const;
  static SourceProfile load(const std::string& path);
};

struct DetectOptions {
  double budget_coeff = 4.0;
  double sample_coeff = 8.0;
  std::uint64_t slice = std::uint64_t{1} << 16;
  ApproxOptions approx;
};

struct DetectResult {
  std::uint64_t estimate = 0;
  EditScript script;
  bool exact = false;           // answered by an exact algorithm
  bool fallback = false;        // no level accepted; exact DP used
  std::size_t detected_B = 0;
  std::uint64_t q_used = 0;
  double threshold = 0;
  std::uint64_t low_distance_units = 0;
  std::uint64_t search_units = 0;
  std::uint64_t approx_units = 0;
  std::uint64_t work_units = 0;
  std::vector<LevelAudit> levels;
  std::vector<std::string> warnings;
};

/// Throws kInvalidArgument unless alpha is a power of two >= 2.
void check_alpha(std::uint64_t alpha);

/// Races the low-distance algorithm against the doubling search in
/// round-robin slices of work. Once a level is accepted the low-distance run
/// may continue up to budget_coeff * n^{4/3} (B + alpha^2)^{2/3} / alpha^{2/3}
/// units in total before the block reduction answers instead.
DetectResult detect_single_shot(const Text& x, const Text& y, std::uint64_t alpha,
                                const Rng& rng, const DetectOptions& options = {});

/// Doubling search with sampling threshold 2 n^{1/2} (B + alpha^2)^{1/2}.
SourceProfile preprocess_source(const Text& x, std::uint64_t alpha, const Rng& rng,
                                double sample_coeff = 8.0);

/// Low-distance run with budget budget_coeff * n * B first, then the block
/// reduction at (2/alpha, B). Refuses (kMismatch) when x is not the profiled
/// string.
DetectResult query_source(const SourceProfile& profile, const Text& x, const Text& y,
                          const Rng& rng, const DetectOptions& options = {});

}  // namespace pedit

#endif  // PEDIT_PARAM_DETECT_HPP
