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

#ifndef PEDIT_PSEUDORANDOM_HPP
#define PEDIT_PSEUDORANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pedit/block_reduction.hpp"
#include "pedit/rng.hpp"
#include "pedit/text.hpp"
#include "pedit/work_meter.hpp"

namespace pedit {

/// x padded with kPad to a positive multiple of 6B.
Text pad_to_blocks(const Text& x, std::size_t B);

/// Finds B-letter substrings of one string within distance k of a given one.
///
/// Every substring b is cut into k + 1 pieces; a string within k edits of b
/// contains one piece verbatim, shifted by at most k from its offset in b.
/// Candidates come from an index of short q-grams and are confirmed with the
/// bounded distance routine, so the search is exact.
class CloseSubstringIndex {
 public:
  CloseSubstringIndex(SymbolView s, std::size_t B, std::size_t k);

  /// Start of some a = s[a, a + B) with ed(a, s[t, t + B)) <= k that does not
  /// intersect [lo, hi) and whose last position is divisible by `grid`.
  std::optional<std::size_t> find_close(std::size_t t, std::size_t lo, std::size_t hi,
                                        std::size_t grid, WorkMeter* meter = nullptr) const;

  std::size_t k() const noexcept { return k_; }

 private:
  std::uint64_t key_at(std::size_t pos) const noexcept;

  SymbolView s_;
  std::size_t B_, k_;
  std::size_t piece_;   // piece length
  std::size_t key_len_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> index_;  // sorted by key
};

struct AuditReport {
  bool exact = true;
  PseudoParams params;
  std::size_t n = 0;
  std::size_t padded_length = 0;
  std::size_t blocks = 0;
  std::uint64_t work_units = 0;

  // Exact mode.
  std::uint64_t m_value = 0;
  std::vector<bool> block_unique;

  // Sampled mode.
  bool verdict = false;
  double threshold = 0;
  double coeff = 0;
  std::uint64_t sample_size = 0;
  std::uint64_t samples_drawn = 0;
  std::uint64_t failures = 0;
  double failure_bound = 0;
};

/// Every B-letter substring of block i (1-based, over the padded string) is at
/// least pB away from every B-letter substring not intersecting the block.
/// Plain enumeration of all pairs; meant as a reference.
bool is_p_unique_exact(const Text& x, const PseudoParams& params, std::size_t i,
                       WorkMeter* meter = nullptr);

/// Largest input m_exact accepts without `force`.
inline constexpr std::size_t kExactAuditLimit = std::size_t{1} << 16;

/// M(x): 6B times the number of blocks that are not p-unique, plus the
/// per-block verdicts. Refuses (kGuardRefusal) above kExactAuditLimit.
AuditReport m_exact(const Text& x, const PseudoParams& params, bool force = false,
                    WorkMeter* meter = nullptr);

/// Grid test for block i: true iff every pair (a outside the block, b inside)
/// of B-letter substrings whose last 0-based positions are multiples of
/// max(1, floor(pB/8)) has ed(a, b) >= ceil(pB/2).
bool uniqueness_test_sampled(const Text& x, const PseudoParams& params, std::size_t i,
                             WorkMeter* meter = nullptr);

/// Resumable sampled estimate of whether M(x) is small: draws
/// ceil(c * (n / threshold) * log2 n) blocks with replacement, runs the grid
/// test on each (memoized per block) and accepts iff at most c * log2 n fail.
/// Stops early once the verdict can no longer change.
class SampledMTest {
 public:
  SampledMTest(const Text& x, const PseudoParams& params, double threshold, const Rng& rng,
               double c = 8.0);
  SampledMTest(const SampledMTest&) = delete;  // index_ views padded_
  SampledMTest& operator=(const SampledMTest&) = delete;

  /// Works until finished or `limit` total units have been spent; yields only
  /// between substring checks. Returns finished().
  bool advance(std::uint64_t limit);

  bool finished() const noexcept { return finished_; }
  bool verdict() const noexcept { return verdict_; }
  std::uint64_t units() const noexcept { return meter_.units(); }
  AuditReport report() const;

 private:
  bool step_block();

  Text x_;
  PseudoParams params_;
  Text padded_;
  CloseSubstringIndex index_;
  Rng rng_;
  WorkMeter meter_;
  double threshold_, c_;
  std::size_t blocks_, grid_;
  std::uint64_t sample_size_;
  double bound_;
  std::vector<std::int8_t> memo_;  // -1 unknown, 0 fails, 1 passes
  std::uint64_t drawn_ = 0;
  std::uint64_t failures_ = 0;
  std::size_t current_ = 0;  // block under test, 0 when none
  std::size_t cursor_ = 0;   // next substring start inside it
  bool finished_ = false;
  bool verdict_ = false;
};

/// Runs SampledMTest to completion.
AuditReport sampled_m_test(const Text& x, const PseudoParams& params, double threshold,
                           const Rng& rng, double c = 8.0, WorkMeter* meter = nullptr);

}  // namespace pedit

#endif  // PEDIT_PSEUDORANDOM_HPP
