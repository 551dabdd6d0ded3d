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

#ifndef PEDIT_BLOCK_REDUCTION_HPP
#define PEDIT_BLOCK_REDUCTION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pedit/clean_align.hpp"
#include "pedit/edit_script.hpp"
#include "pedit/rng.hpp"
#include "pedit/text.hpp"
#include "pedit/work_meter.hpp"

namespace pedit {

/// The pair (p, B), stored as q = 1/p so every threshold is an exact integer
/// computation. q must be a power of two; when q > B it is clamped to B and
/// `clamped` is set.
struct PseudoParams {
  std::uint64_t q = 1;
  std::size_t B = 1;
  bool clamped = false;

  static PseudoParams make(std::uint64_t q, std::size_t B);

  double p() const noexcept { return 1.0 / static_cast<double>(q); }
  /// floor(pB / 8)
  std::size_t match_radius() const noexcept { return B / (8 * q); }
  /// max(1, floor(pB / 100))
  std::size_t grid_step() const noexcept;
  /// Smallest integer distance that is >= pB.
  std::size_t uniq_threshold() const noexcept { return (B + q - 1) / q; }
};

/// Parses "1/4", "0.25" or "1" into q = 1/p. Throws kInvalidArgument unless
/// 1/p is a positive integer.
std::uint64_t parse_inverse_p(std::string_view text);

/// x and y padded with kPad to a common length n' (a positive multiple of 6B),
/// cut into 6B-blocks of x and 3B-blocks of y. Block indices are 1-based.
class BlockDecomposition {
 public:
  BlockDecomposition(const Text& x, const Text& y, std::size_t B);

  std::size_t B() const noexcept { return B_; }
  std::size_t padded_length() const noexcept { return n_; }
  std::size_t x_blocks() const noexcept { return n_ / (6 * B_); }
  std::size_t y_blocks() const noexcept { return n_ / (3 * B_); }
  const Text& x() const noexcept { return x_; }
  const Text& y() const noexcept { return y_; }
  std::size_t x_length() const noexcept { return x_len_; }
  std::size_t y_length() const noexcept { return y_len_; }

  SymbolView x_block(std::size_t i) const;
  SymbolView y_block(std::size_t j) const;

 private:
  std::size_t B_;
  std::size_t n_;
  std::size_t x_len_, y_len_;
  Text x_, y_;
};

/// The partial / full edit-match comparison between x-blocks and y-blocks,
/// memoized per (i, j). Work (bounded distance checks) is charged to units().
class EditMatcher {
 public:
  EditMatcher(const BlockDecomposition& dec, const PseudoParams& params);

  /// Some window of length 6B starting on the grid inside y^{j-1} is within
  /// match_radius of x^i. Always false for j < 2.
  bool partial(std::size_t i, std::size_t j);
  /// partial(i, j) and not partial(i, j - 1).
  bool full(std::size_t i, std::size_t j);

  /// Oracle over this matcher's full(i, j).
  MatchOracle oracle();

  const BlockDecomposition& decomposition() const noexcept { return dec_; }
  const PseudoParams& params() const noexcept { return params_; }
  std::uint64_t units() const noexcept { return meter_.units(); }
  std::uint64_t window_checks() const noexcept { return window_checks_; }

 private:
  const BlockDecomposition& dec_;
  PseudoParams params_;
  std::vector<std::int8_t> partial_memo_;  // -1 unknown
  WorkMeter meter_;
  std::uint64_t window_checks_ = 0;
};

struct RecoveryOptions {
  /// Besides the windows around matched blocks, admit edges for the x letters
  /// lying between matched blocks within 9B of the line joining the
  /// neighbouring anchors (whole strings when E is empty).
  bool interpolate_gaps = false;
  /// Pair deletions with insertions inside each gap as substitutions.
  bool merge_substitutions = false;
};

/// Builds the sparse edge set from the block alignment E, aligns it and
/// converts the result into a script from the unpadded x to the unpadded y.
/// Throws kInvalidArgument when an edge of E is not a full edit match.
EditScript recover_edits(EditMatcher& matcher, const Alignment& E,
                         const RecoveryOptions& options = {}, WorkMeter* meter = nullptr);

struct ApproxOptions {
  /// 0 selects ceil(log2 n).
  std::uint32_t repetitions = 0;
  std::uint32_t attempts_coeff = 100;
  bool interpolate_gaps = true;
  bool merge_substitutions = true;
};

struct ApproxResult {
  std::uint64_t estimate = 0;
  EditScript script;
  std::uint32_t repetitions = 0;
  std::uint64_t work_units = 0;
  std::uint64_t oracle_evaluations = 0;
  bool trivial = false;  // the fallback script won
  PseudoParams params;
  std::vector<std::string> warnings;
};

/// Runs decomposition, clean alignment over the full-match oracle and
/// recovery `repetitions` times on split streams of `rng`, and returns the
/// shortest script seen, the fallback delete/insert script included.
ApproxResult approx_ed(const Text& x, const Text& y, const PseudoParams& params, const Rng& rng,
                       const ApproxOptions& options = {});

}  // namespace pedit

#endif  // PEDIT_BLOCK_REDUCTION_HPP
