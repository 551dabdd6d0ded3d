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

#ifndef PEDIT_SPARSE_ALIGN_HPP
#define PEDIT_SPARSE_ALIGN_HPP

#include <cstddef>
#include <vector>

#include "pedit/edit_script.hpp"
#include "pedit/text.hpp"
#include "pedit/work_meter.hpp"

namespace pedit {

/// A candidate or chosen match between position x of one sequence and
/// position y of another, both 1-based.
struct Edge {
  std::size_t x = 0;
  std::size_t y = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::vector<Edge>;

/// Pairs strictly increasing in both coordinates.
using Alignment = std::vector<Edge>;

/// True when `a` is strictly increasing in both coordinates.
bool is_non_crossing(const Alignment& a);

/// Maximum-cardinality non-crossing subset of `edges`, in O(|T| log |T|):
/// sort by x ascending then y descending, then take a longest strictly
/// increasing subsequence of y. Among optimal answers the one chosen is
/// deterministic but otherwise unspecified. Charges one unit per edge for the
/// sort and one per edge for the scan.
Alignment max_restricted_alignment(EdgeSet edges, WorkMeter* meter = nullptr);

/// Indel script turning u into v that keeps exactly the pairs of `a`:
/// unmatched u positions are deleted and unmatched v positions inserted, so
/// the length is |u| + |v| - 2|a|. With `merge_substitutions`, each gap
/// between consecutive pairs pairs up its deletions and insertions into
/// substitutions (never longer). Throws ScriptError when a pair joins
/// different symbols or leaves the strings.
EditScript script_from_alignment(const Text& u, const Text& v, const Alignment& a,
                                 bool merge_substitutions = false);

}  // namespace pedit

#endif  // PEDIT_SPARSE_ALIGN_HPP
