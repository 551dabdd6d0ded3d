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

#include "pedit/pseudorandom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pedit/edit_distance.hpp"
#include "pedit/error.hpp"

namespace pedit {

namespace {

// ceil(pB / 2) - 1: the largest distance the grid test treats as close.
std::size_t grid_test_radius(const PseudoParams& params) {
  return (params.B + 2 * params.q - 1) / (2 * params.q) - 1;
}

std::size_t grid_test_step(const PseudoParams& params) {
  return std::max<std::size_t>(1, params.B / (8 * params.q));
}

// First start t >= lo whose substring [t, t + B) ends on the grid.
std::size_t first_on_grid(std::size_t lo, std::size_t B, std::size_t grid) {
  const std::size_t end = lo + B - 1;
  return lo + (grid - end % grid) % grid;
}

}  // namespace

Text pad_to_blocks(const Text& x, std::size_t B) {
  if (B == 0) throw Error(ErrorCode::kInvalidArgument, "block size B must be positive");
  const std::size_t unit = 6 * B;
  const std::size_t n = std::max(unit, (x.size() + unit - 1) / unit * unit);
  return x.padded_to(n);
}

CloseSubstringIndex::CloseSubstringIndex(SymbolView s, std::size_t B, std::size_t k)
    : s_(s), B_(B), k_(k) {
  if (B == 0 || k >= B) {
    throw Error(ErrorCode::kInvalidArgument,
                "close-substring search needs 0 <= k < B, got k = " + std::to_string(k) +
                    ", B = " + std::to_string(B));
  }
  piece_ = B / (k + 1);
  key_len_ = std::min<std::size_t>(piece_, 8);
  if (s_.size() >= key_len_) {
    index_.reserve(s_.size() - key_len_ + 1);
    for (std::size_t p = 0; p + key_len_ <= s_.size(); ++p) {
      index_.emplace_back(key_at(p), static_cast<std::uint32_t>(p));
    }
    std::sort(index_.begin(), index_.end());
  }
}

std::uint64_t CloseSubstringIndex::key_at(std::size_t pos) const noexcept {
  std::uint64_t key = 0;
  for (std::size_t r = 0; r < key_len_; ++r) key = (key << 8) | s_[pos + r];
  return key;
}

std::optional<std::size_t> CloseSubstringIndex::find_close(std::size_t t, std::size_t lo,
                                                           std::size_t hi, std::size_t grid,
                                                           WorkMeter* meter) const {
  if (t + B_ > s_.size()) return std::nullopt;
  const SymbolView b = s_.subspan(t, B_);
  const auto k = static_cast<std::int64_t>(k_);
  const auto last_start = static_cast<std::int64_t>(s_.size() - B_);
  std::vector<std::size_t> cands;
  for (std::size_t m = 0; m <= k_; ++m) {
    const std::size_t off = m * piece_;
    const std::uint64_t key = key_at(t + off);
    auto it = std::lower_bound(index_.begin(), index_.end(),
                               std::pair<std::uint64_t, std::uint32_t>{key, 0});
    for (; it != index_.end() && it->first == key; ++it) {
      const std::int64_t base = static_cast<std::int64_t>(it->second) - static_cast<std::int64_t>(off);
      for (std::int64_t a = std::max<std::int64_t>(0, base - k);
           a <= std::min(last_start, base + k); ++a) {
        const auto ua = static_cast<std::size_t>(a);
        if (ua + B_ > lo && ua < hi) continue;
        if ((ua + B_ - 1) % grid != 0) continue;
        cands.push_back(ua);
      }
    }
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  if (meter != nullptr) meter->charge(cands.size());
  for (std::size_t a : cands) {
    if (ed_bounded(s_.subspan(a, B_), b, k_, meter).has_value()) return a;
  }
  return std::nullopt;
}

bool is_p_unique_exact(const Text& x, const PseudoParams& params, std::size_t i,
                       WorkMeter* meter) {
  const Text padded = pad_to_blocks(x, params.B);
  const std::size_t B = params.B;
  const std::size_t blocks = padded.size() / (6 * B);
  if (i < 1 || i > blocks) {
    throw Error(ErrorCode::kOutOfRange, "block " + std::to_string(i) + " does not exist");
  }
  const std::size_t k = params.uniq_threshold() - 1;
  const std::size_t lo = (i - 1) * 6 * B;
  const std::size_t hi = lo + 6 * B;
  const SymbolView s = padded.view();
  for (std::size_t t = lo; t + B <= hi; ++t) {
    for (std::size_t a = 0; a + B <= s.size(); ++a) {
      if (a + B > lo && a < hi) continue;
      if (ed_bounded(s.subspan(a, B), s.subspan(t, B), k, meter).has_value()) return false;
    }
  }
  return true;
}

AuditReport m_exact(const Text& x, const PseudoParams& params, bool force, WorkMeter* meter) {
  if (x.size() > kExactAuditLimit && !force) {
    throw Error(ErrorCode::kGuardRefusal,
                "exact audit is limited to n <= " + std::to_string(kExactAuditLimit) +
                    " (got " + std::to_string(x.size()) + "); use force to override");
  }
  const std::size_t B = params.B;
  const Text padded = pad_to_blocks(x, B);
  const std::size_t unit = 6 * B;
  AuditReport rep;
  rep.exact = true;
  rep.params = params;
  rep.n = x.size();
  rep.padded_length = padded.size();
  rep.blocks = padded.size() / unit;
  rep.block_unique.assign(rep.blocks, true);

  WorkMeter local;
  const CloseSubstringIndex index(padded.view(), B, params.uniq_threshold() - 1);
  for (std::size_t i = 0; i < rep.blocks; ++i) {
    if (!rep.block_unique[i]) continue;
    const std::size_t lo = i * unit;
    const std::size_t hi = lo + unit;
    for (std::size_t t = lo; t + B <= hi; ++t) {
      const auto a = index.find_close(t, lo, hi, 1, &local);
      if (!a) continue;
      rep.block_unique[i] = false;
      // The partner substring makes its own block non-unique too when it
      // sits inside a single block.
      const std::size_t other = *a / unit;
      if ((*a + B - 1) / unit == other) rep.block_unique[other] = false;
      break;
    }
  }
  for (bool u : rep.block_unique) {
    if (!u) rep.m_value += unit;
  }
  rep.work_units = local.units();
  if (meter != nullptr) meter->charge(local.units());
  return rep;
}

bool uniqueness_test_sampled(const Text& x, const PseudoParams& params, std::size_t i,
                             WorkMeter* meter) {
  const std::size_t B = params.B;
  const Text padded = pad_to_blocks(x, B);
  const std::size_t unit = 6 * B;
  if (i < 1 || i > padded.size() / unit) {
    throw Error(ErrorCode::kOutOfRange, "block " + std::to_string(i) + " does not exist");
  }
  const CloseSubstringIndex index(padded.view(), B, grid_test_radius(params));
  const std::size_t grid = grid_test_step(params);
  const std::size_t lo = (i - 1) * unit;
  const std::size_t hi = lo + unit;
  for (std::size_t t = first_on_grid(lo, B, grid); t + B <= hi; t += grid) {
    if (index.find_close(t, lo, hi, grid, meter)) return false;
  }
  return true;
}

SampledMTest::SampledMTest(const Text& x, const PseudoParams& params, double threshold,
                           const Rng& rng, double c)
    : x_(x), params_(params), padded_(pad_to_blocks(x, params.B)),
      index_(padded_.view(), params.B, grid_test_radius(params)), rng_(rng),
      threshold_(threshold), c_(c) {
  if (!(threshold > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "sampling threshold must be positive");
  }
  if (!(c >= 1)) throw Error(ErrorCode::kInvalidArgument, "sample coefficient must be >= 1");
  blocks_ = padded_.size() / (6 * params.B);
  grid_ = grid_test_step(params);
  const double n = static_cast<double>(std::max<std::size_t>(x.size(), 2));
  const double logn = std::log2(n);
  sample_size_ = static_cast<std::uint64_t>(std::ceil(c * (n / threshold) * logn));
  bound_ = c * logn;
  memo_.assign(blocks_ + 1, -1);
  if (static_cast<double>(sample_size_) <= bound_) {
    finished_ = true;
    verdict_ = true;
  }
}

bool SampledMTest::step_block() {
  // Tests one substring of the current block; true once the block is decided.
  const std::size_t unit = 6 * params_.B;
  const std::size_t lo = (current_ - 1) * unit;
  const std::size_t hi = lo + unit;
  meter_.charge(1);
  if (cursor_ + params_.B > hi) {
    memo_[current_] = 1;
    return true;
  }
  if (index_.find_close(cursor_, lo, hi, grid_, &meter_)) {
    memo_[current_] = 0;
    return true;
  }
  cursor_ += grid_;
  return false;
}

bool SampledMTest::advance(std::uint64_t limit) {
  while (!finished_) {
    std::size_t decided = 0;
    if (current_ == 0) {
      if (drawn_ == sample_size_) {
        finished_ = true;
        verdict_ = static_cast<double>(failures_) <= bound_;
        break;
      }
      const auto i = static_cast<std::size_t>(rng_.uniform(1, blocks_));
      ++drawn_;
      if (memo_[i] < 0) {
        current_ = i;
        cursor_ = first_on_grid((i - 1) * 6 * params_.B, params_.B, grid_);
        continue;
      }
      decided = i;
    } else {
      if (meter_.units() >= limit) return false;
      if (!step_block()) continue;
      decided = current_;
      current_ = 0;
    }
    if (memo_[decided] == 0) ++failures_;
    if (static_cast<double>(failures_) > bound_) {
      finished_ = true;
      verdict_ = false;
    } else if (static_cast<double>(failures_ + (sample_size_ - drawn_)) <= bound_) {
      finished_ = true;
      verdict_ = true;
    }
  }
  return true;
}

AuditReport SampledMTest::report() const {
  AuditReport rep;
  rep.exact = false;
  rep.params = params_;
  rep.n = x_.size();
  rep.padded_length = padded_.size();
  rep.blocks = blocks_;
  rep.work_units = meter_.units();
  rep.verdict = verdict_;
  rep.threshold = threshold_;
  rep.coeff = c_;
  rep.sample_size = sample_size_;
  rep.samples_drawn = drawn_;
  rep.failures = failures_;
  rep.failure_bound = bound_;
  return rep;
}

AuditReport sampled_m_test(const Text& x, const PseudoParams& params, double threshold,
                           const Rng& rng, double c, WorkMeter* meter) {
  SampledMTest test(x, params, threshold, rng, c);
  test.advance(std::numeric_limits<std::uint64_t>::max());
  if (meter != nullptr) meter->charge(test.units());
  return test.report();
}

}  // namespace pedit
