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

#ifndef PEDIT_WORK_METER_HPP
#define PEDIT_WORK_METER_HPP

#include <cstdint>

namespace pedit {

/// Deterministic stand-in for running time: one unit per DP cell, per
/// character comparison, per sparse edge handled. Budgets and races are
/// expressed in these units instead of wall clock.
class WorkMeter {
 public:
  void charge(std::uint64_t units = 1) noexcept { units_ += units; }
  std::uint64_t units() const noexcept { return units_; }

 private:
  std::uint64_t units_ = 0;
};

}  // namespace pedit

#endif  // PEDIT_WORK_METER_HPP
