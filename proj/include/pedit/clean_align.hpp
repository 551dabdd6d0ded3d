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

#ifndef PEDIT_CLEAN_ALIGN_HPP
#define PEDIT_CLEAN_ALIGN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "pedit/rng.hpp"
#include "pedit/sparse_align.hpp"

namespace pedit {

/// Memoizing comparison function f(i, j) over 1-based indices
/// i in [1, u_len], j in [1, v_len]. evaluations() counts distinct calls into
/// the underlying predicate; queries() counts every lookup.
class MatchOracle {
 public:
  using Predicate = std::function<bool(std::size_t, std::size_t)>;

  MatchOracle(std::size_t u_len, std::size_t v_len, Predicate f);

  /// Oracle over an explicit relation given as 1-based edges.
  static MatchOracle from_edges(std::size_t u_len, std::size_t v_len, const EdgeSet& edges);
  /// Oracle over a row-major 0/1 matrix (rows index u).
  static MatchOracle from_matrix(std::vector<std::vector<bool>> matrix);

  bool query(std::size_t i, std::size_t j);

  std::size_t u_len() const noexcept { return u_len_; }
  std::size_t v_len() const noexcept { return v_len_; }
  std::uint64_t evaluations() const noexcept { return evaluations_; }
  std::uint64_t queries() const noexcept { return queries_; }

 private:
  std::size_t u_len_;
  std::size_t v_len_;
  Predicate f_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::uint64_t evaluations_ = 0;
  std::uint64_t queries_ = 0;
};

/// Edit-matching alignment over indices of u and v. depth[k] is the recursion
/// depth at which pairs[k] was chosen as a pivot (diagnostic only).
struct BlockAlignment {
  Alignment pairs;
  std::vector<std::uint32_t> depth;
};

/// Asymmetric cost: unmatched u letters, plus the number of starting indices
/// i (1 <= i <= |v| - 6) whose window v_i .. v_{i+6} is entirely unmatched.
struct CleanCost {
  std::uint64_t x_portion = 0;
  std::uint64_t y_portion = 0;
  std::uint64_t total() const noexcept { return x_portion + y_portion; }

  friend bool operator==(const CleanCost&, const CleanCost&) = default;
};

inline constexpr std::size_t kCleanWindow = 7;

CleanCost alignment_cost(const Alignment& a, std::size_t u_len, std::size_t v_len);

/// Randomized pivot recursion. On each subproblem (u chunk, v chunk):
/// return nothing when |v| >= 8|u| + 12, |u| >= 2|v| or |u| = 0; otherwise up
/// to ceil(attempts_coeff * log2(max(n, 2))) times draw a pivot uniformly from
/// the middle positions ceil(|u|/4) .. ceil(3|u|/4) of the u chunk, scan the
/// whole v chunk, and if the pivot matches exactly one v position, keep that
/// edge and recurse on both sides. n is max(u_len, v_len) of the root problem.
BlockAlignment solve_clean_alignment(MatchOracle& f, Rng& rng, std::uint32_t attempts_coeff = 100);

struct CleanOptimum {
  BlockAlignment alignment;
  CleanCost cost;
};

/// Minimum-cost clean edit-matching alignment by DP over the clean-eligible
/// edges (both endpoints of degree exactly one in f). Evaluates all of f;
/// refuses (kGuardRefusal) when either side exceeds kCleanOracleLimit.
inline constexpr std::size_t kCleanOracleLimit = 64;
CleanOptimum brute_force_clean_opt(MatchOracle& f);

}  // namespace pedit

#endif  // PEDIT_CLEAN_ALIGN_HPP
