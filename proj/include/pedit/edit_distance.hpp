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

#ifndef PEDIT_EDIT_DISTANCE_HPP
#define PEDIT_EDIT_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pedit/edit_script.hpp"
#include "pedit/text.hpp"
#include "pedit/work_meter.hpp"

namespace pedit {

struct DistanceWithScript {
  std::uint64_t distance = 0;
  EditScript script;
};

/// Textbook O(|u||v|) Levenshtein DP (unit costs). One work unit per cell.
std::uint64_t ed_exact(SymbolView u, SymbolView v, WorkMeter* meter = nullptr);

/// Same DP with a traceback matrix; the script is right-to-left and has
/// exactly `distance` ops. Refuses (kGuardRefusal) above 2^30 cells.
DistanceWithScript ed_exact_script(SymbolView u, SymbolView v, WorkMeter* meter = nullptr);

/// Exact distance when it is at most k, nullopt otherwise.
///
/// Furthest-reaching diagonal transition with a cutoff on diagonals that can
/// no longer reach the end within k: at most (k+1)^2 cells plus the matching
/// slides along them. Charges one unit per cell of round e >= 1 and one unit
/// per matched character.
std::optional<std::uint64_t> ed_bounded(SymbolView u, SymbolView v, std::uint64_t k,
                                        WorkMeter* meter = nullptr);

/// Runs the low-distance algorithm until it either finishes (distance plus
/// script) or would need more than `budget` units (nullopt). Deterministic in
/// (u, v, budget); the meter is charged with the units actually spent.
std::optional<DistanceWithScript> ed_bounded_budgeted(SymbolView u, SymbolView v,
                                                      std::uint64_t budget,
                                                      WorkMeter* meter = nullptr);

/// Resumable form of the low-distance algorithm, used where two
/// computations share a work budget in round-robin slices. Holds views into
/// u and v; both must outlive the run.
class LowDistanceRun {
 public:
  LowDistanceRun(SymbolView u, SymbolView v);

  /// Continues until finished or until the run has consumed `limit` units in
  /// total. Never spends past `limit`. Returns finished().
  bool advance(std::uint64_t limit);

  bool finished() const noexcept { return finished_; }
  std::uint64_t units() const noexcept { return units_; }
  /// Every distance below this value has been ruled out.
  std::uint64_t lower_bound() const noexcept { return finished_ ? distance_ : round_; }
  std::uint64_t distance() const;
  EditScript script() const;

 private:
  struct Row {
    std::int64_t lo = 0;  // first diagonal stored
    std::vector<std::int32_t> reach;
  };

  void open_round();
  std::int32_t start_of(std::int64_t d) const;
  bool reaches(std::int64_t e, std::int64_t d, std::int64_t i) const;

  SymbolView u_, v_;
  std::int64_t n_, m_;
  std::vector<Row> rows_;
  std::uint64_t round_ = 0;
  std::int64_t diag_ = 0;
  std::int64_t hi_ = 0;
  bool sliding_ = false;
  bool finished_ = false;
  std::uint64_t distance_ = 0;
  std::uint64_t units_ = 0;
};

}  // namespace pedit

#endif  // PEDIT_EDIT_DISTANCE_HPP
