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

#include "pedit/edit_distance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "pedit/error.hpp"

namespace pedit {

namespace {

constexpr std::int32_t kUnreached = std::numeric_limits<std::int32_t>::min() / 2;

void charge(WorkMeter* meter, std::uint64_t units) {
  if (meter != nullptr) meter->charge(units);
}

}  // namespace

std::uint64_t ed_exact(SymbolView u, SymbolView v, WorkMeter* meter) {
  const std::size_t n = u.size();
  const std::size_t m = v.size();
  std::vector<std::uint32_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<std::uint32_t>(i);
    const Symbol ui = u[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      std::uint32_t best = prev[j - 1] + (ui == v[j - 1] ? 0 : 1);
      best = std::min(best, prev[j] + 1);
      best = std::min(best, cur[j - 1] + 1);
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  charge(meter, static_cast<std::uint64_t>(n) * m);
  return prev[m];
}

DistanceWithScript ed_exact_script(SymbolView u, SymbolView v, WorkMeter* meter) {
  const std::size_t n = u.size();
  const std::size_t m = v.size();
  const std::uint64_t cells = static_cast<std::uint64_t>(n + 1) * (m + 1);
  if (cells > (std::uint64_t{1} << 30)) {
    throw Error(ErrorCode::kGuardRefusal,
                "exact traceback would need " + std::to_string(cells) + " cells");
  }
  enum : std::uint8_t { kDiag, kUp, kLeft };
  std::vector<std::uint8_t> from(cells);
  auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };

  std::vector<std::uint32_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    prev[j] = static_cast<std::uint32_t>(j);
    from[at(0, j)] = kLeft;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = static_cast<std::uint32_t>(i);
    from[at(i, 0)] = kUp;
    const Symbol ui = u[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      std::uint32_t best = prev[j - 1] + (ui == v[j - 1] ? 0 : 1);
      std::uint8_t dir = kDiag;
      if (prev[j] + 1 < best) {
        best = prev[j] + 1;
        dir = kUp;
      }
      if (cur[j - 1] + 1 < best) {
        best = cur[j - 1] + 1;
        dir = kLeft;
      }
      cur[j] = best;
      from[at(i, j)] = dir;
    }
    std::swap(prev, cur);
  }
  charge(meter, static_cast<std::uint64_t>(n) * m);

  DistanceWithScript out;
  out.distance = prev[m];
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    switch (from[at(i, j)]) {
      case kDiag:
        if (u[i - 1] != v[j - 1]) out.script.push_back(EditOp::sub(i, v[j - 1]));
        --i;
        --j;
        break;
      case kUp:
        out.script.push_back(EditOp::del(i));
        --i;
        break;
      default:
        out.script.push_back(EditOp::ins(i + 1, v[j - 1]));
        --j;
        break;
    }
  }
  return out;
}

std::optional<std::uint64_t> ed_bounded(SymbolView u, SymbolView v, std::uint64_t k,
                                        WorkMeter* meter) {
  const std::int64_t n = static_cast<std::int64_t>(u.size());
  const std::int64_t m = static_cast<std::int64_t>(v.size());
  const std::int64_t diff = m - n;
  if (static_cast<std::uint64_t>(diff < 0 ? -diff : diff) > k) return std::nullopt;
  const std::int64_t cap = static_cast<std::int64_t>(
      std::min<std::uint64_t>(k, static_cast<std::uint64_t>(std::max(n, m))));

  // Diagonal d = j - i lives at index d + offset; one sentinel slot per side.
  const std::int64_t offset = cap + 1;
  const std::size_t width = static_cast<std::size_t>(2 * cap + 3);
  thread_local std::vector<std::int32_t> prev_buf, cur_buf;
  prev_buf.assign(width, kUnreached);
  cur_buf.assign(width, kUnreached);
  std::int32_t* prev = prev_buf.data();
  std::int32_t* cur = cur_buf.data();

  std::uint64_t units = 0;
  std::int64_t i = 0;
  while (i < n && i < m && u[i] == v[i]) ++i;
  units += static_cast<std::uint64_t>(i);
  if (diff == 0 && i == n) {
    charge(meter, units);
    return 0;
  }
  prev[offset] = static_cast<std::int32_t>(i);

  for (std::int64_t e = 1; e <= cap; ++e) {
    const std::int64_t lo = std::max({-e, -n, diff - (cap - e)});
    const std::int64_t hi = std::min({e, m, diff + (cap - e)});
    std::fill(cur, cur + width, kUnreached);
    for (std::int64_t d = lo; d <= hi; ++d) {
      ++units;
      const std::int64_t end = std::min(n, m - d);
      std::int64_t best = kUnreached;
      if (std::int32_t p = prev[d + offset]; p != kUnreached) {
        best = std::min<std::int64_t>(p + 1, end);
      }
      if (std::int32_t p = prev[d + 1 + offset]; p != kUnreached) {
        best = std::max(best, std::min<std::int64_t>(p + 1, end));
      }
      if (std::int32_t p = prev[d - 1 + offset]; p != kUnreached) {
        best = std::max(best, std::min<std::int64_t>(p, end));
      }
      if (best == kUnreached) continue;
      std::int64_t r = best;
      while (r < n && r + d < m && u[r] == v[r + d]) ++r;
      units += static_cast<std::uint64_t>(r - best);
      cur[d + offset] = static_cast<std::int32_t>(r);
      if (d == diff && r == n) {
        charge(meter, units);
        return static_cast<std::uint64_t>(e);
      }
    }
    std::swap(prev, cur);
  }
  charge(meter, units);
  return std::nullopt;
}

std::optional<DistanceWithScript> ed_bounded_budgeted(SymbolView u, SymbolView v,
                                                      std::uint64_t budget,
                                                      WorkMeter* meter) {
  LowDistanceRun run(u, v);
  const bool done = run.advance(budget);
  charge(meter, run.units());
  if (!done) return std::nullopt;
  return DistanceWithScript{run.distance(), run.script()};
}

LowDistanceRun::LowDistanceRun(SymbolView u, SymbolView v)
    : u_(u), v_(v), n_(static_cast<std::int64_t>(u.size())),
      m_(static_cast<std::int64_t>(v.size())) {
  open_round();
}

void LowDistanceRun::open_round() {
  const auto e = static_cast<std::int64_t>(round_);
  Row row;
  row.lo = std::max(-e, -n_);
  hi_ = std::min(e, m_);
  row.reach.assign(static_cast<std::size_t>(hi_ - row.lo + 1), kUnreached);
  diag_ = row.lo;
  rows_.push_back(std::move(row));
}

std::int32_t LowDistanceRun::start_of(std::int64_t d) const {
  const Row& prev = rows_[round_ - 1];
  auto reach_at = [&prev](std::int64_t dd) -> std::int32_t {
    const std::int64_t idx = dd - prev.lo;
    if (idx < 0 || idx >= static_cast<std::int64_t>(prev.reach.size())) return kUnreached;
    return prev.reach[static_cast<std::size_t>(idx)];
  };
  const std::int64_t end = std::min(n_, m_ - d);
  std::int64_t best = kUnreached;
  if (std::int32_t p = reach_at(d); p != kUnreached) best = std::min<std::int64_t>(p + 1, end);
  if (std::int32_t p = reach_at(d + 1); p != kUnreached) {
    best = std::max(best, std::min<std::int64_t>(p + 1, end));
  }
  if (std::int32_t p = reach_at(d - 1); p != kUnreached) {
    best = std::max(best, std::min<std::int64_t>(p, end));
  }
  return static_cast<std::int32_t>(best);
}

bool LowDistanceRun::advance(std::uint64_t limit) {
  while (!finished_) {
    Row& row = rows_.back();
    const std::int64_t d = diag_;
    const auto idx = static_cast<std::size_t>(d - row.lo);
    if (!sliding_) {
      std::int32_t start = 0;
      if (round_ > 0) {
        if (units_ >= limit) return false;
        ++units_;
        start = start_of(d);
      }
      row.reach[idx] = start;
      sliding_ = true;
    }
    std::int64_t i = row.reach[idx];
    while (i < n_ && i + d < m_ && u_[static_cast<std::size_t>(i)] ==
                                        v_[static_cast<std::size_t>(i + d)]) {
      if (units_ >= limit) {
        row.reach[idx] = static_cast<std::int32_t>(i);
        return false;
      }
      ++units_;
      ++i;
    }
    row.reach[idx] = static_cast<std::int32_t>(i);
    sliding_ = false;
    if (d == m_ - n_ && i == n_) {
      finished_ = true;
      distance_ = round_;
      return true;
    }
    if (diag_ < hi_) {
      ++diag_;
    } else {
      ++round_;
      open_round();
    }
  }
  return true;
}

std::uint64_t LowDistanceRun::distance() const {
  if (!finished_) throw std::logic_error("LowDistanceRun::distance before completion");
  return distance_;
}

bool LowDistanceRun::reaches(std::int64_t e, std::int64_t d, std::int64_t i) const {
  if (e < 0) return false;
  const Row& row = rows_[static_cast<std::size_t>(e)];
  const std::int64_t idx = d - row.lo;
  if (idx < 0 || idx >= static_cast<std::int64_t>(row.reach.size())) return false;
  const std::int32_t r = row.reach[static_cast<std::size_t>(idx)];
  return r != kUnreached && i <= r;
}

EditScript LowDistanceRun::script() const {
  if (!finished_) throw std::logic_error("LowDistanceRun::script before completion");
  // D(i, i + d) <= e exactly when i <= reach[e][d]: distances never decrease
  // along a diagonal, so each round's reachable set is a prefix of it.
  EditScript ops;
  std::int64_t i = n_;
  std::int64_t j = m_;
  auto e = static_cast<std::int64_t>(distance_);
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && u_[static_cast<std::size_t>(i - 1)] == v_[static_cast<std::size_t>(j - 1)]) {
      --i;
      --j;
      continue;
    }
    const std::int64_t d = j - i;
    if (i > 0 && j > 0 && reaches(e - 1, d, i - 1)) {
      ops.push_back(EditOp::sub(static_cast<std::size_t>(i), v_[static_cast<std::size_t>(j - 1)]));
      --i;
      --j;
    } else if (i > 0 && reaches(e - 1, d + 1, i - 1)) {
      ops.push_back(EditOp::del(static_cast<std::size_t>(i)));
      --i;
    } else if (j > 0 && reaches(e - 1, d - 1, i)) {
      ops.push_back(EditOp::ins(static_cast<std::size_t>(i + 1), v_[static_cast<std::size_t>(j - 1)]));
      --j;
    } else {
      throw std::logic_error("LowDistanceRun traceback lost its path");
    }
    --e;
  }
  return ops;
}

}  // namespace pedit
