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

#include "pedit/block_reduction.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <string>

#include "pedit/edit_distance.hpp"
#include "pedit/error.hpp"
#include "pedit/sparse_align.hpp"

namespace pedit {

PseudoParams PseudoParams::make(std::uint64_t q, std::size_t B) {
  if (B == 0) throw Error(ErrorCode::kInvalidArgument, "block size B must be positive");
  if (q == 0 || !std::has_single_bit(q)) {
    throw Error(ErrorCode::kInvalidArgument,
                "1/p must be a power of two, got " + std::to_string(q));
  }
  PseudoParams out;
  out.B = B;
  out.q = q;
  if (q > B) {
    out.q = B;
    out.clamped = true;
  }
  return out;
}

std::size_t PseudoParams::grid_step() const noexcept {
  return std::max<std::size_t>(1, B / (100 * q));
}

std::uint64_t parse_inverse_p(std::string_view text) {
  auto bad = [&text]() {
    return Error(ErrorCode::kInvalidArgument,
                 "cannot read p from '" + std::string(text) + "'; expected 1/q with integer q");
  };
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::uint64_t num = 0, den = 0;
    const auto a = text.substr(0, slash);
    const auto b = text.substr(slash + 1);
    if (std::from_chars(a.data(), a.data() + a.size(), num).ec != std::errc{} ||
        std::from_chars(b.data(), b.data() + b.size(), den).ec != std::errc{}) {
      throw bad();
    }
    if (num == 0 || den == 0 || den % num != 0 || den < num) throw bad();
    return den / num;
  }
  double p = 0;
  try {
    std::size_t used = 0;
    p = std::stod(std::string(text), &used);
    if (used != text.size()) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  if (!(p > 0.0 && p <= 1.0)) throw bad();
  const double q = std::round(1.0 / p);
  if (std::abs(q * p - 1.0) > 1e-9) throw bad();
  return static_cast<std::uint64_t>(q);
}

BlockDecomposition::BlockDecomposition(const Text& x, const Text& y, std::size_t B)
    : B_(B), x_len_(x.size()), y_len_(y.size()) {
  if (B == 0) throw Error(ErrorCode::kInvalidArgument, "block size B must be positive");
  const std::size_t unit = 6 * B;
  const std::size_t longest = std::max(x.size(), y.size());
  n_ = std::max(unit, (longest + unit - 1) / unit * unit);
  x_ = x.padded_to(n_);
  y_ = y.padded_to(n_);
}

SymbolView BlockDecomposition::x_block(std::size_t i) const {
  if (i < 1 || i > x_blocks()) {
    throw Error(ErrorCode::kOutOfRange, "x block " + std::to_string(i) + " does not exist");
  }
  return x_.view().subspan((i - 1) * 6 * B_, 6 * B_);
}

SymbolView BlockDecomposition::y_block(std::size_t j) const {
  if (j < 1 || j > y_blocks()) {
    throw Error(ErrorCode::kOutOfRange, "y block " + std::to_string(j) + " does not exist");
  }
  return y_.view().subspan((j - 1) * 3 * B_, 3 * B_);
}

EditMatcher::EditMatcher(const BlockDecomposition& dec, const PseudoParams& params)
    : dec_(dec), params_(params),
      partial_memo_(dec.x_blocks() * (dec.y_blocks() + 1), -1) {
  if (params.B != dec.B()) {
    throw Error(ErrorCode::kInvalidArgument, "matcher and decomposition disagree on B");
  }
}

bool EditMatcher::partial(std::size_t i, std::size_t j) {
  if (j < 2) return false;
  const std::size_t ny = dec_.y_blocks();
  if (i < 1 || i > dec_.x_blocks() || j > ny) {
    throw Error(ErrorCode::kOutOfRange, "block pair (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ") does not exist");
  }
  std::int8_t& slot = partial_memo_[(i - 1) * (ny + 1) + j];
  if (slot >= 0) return slot == 1;

  const std::size_t B = dec_.B();
  const std::size_t len = 6 * B;
  const std::size_t n = dec_.padded_length();
  const std::size_t g = params_.grid_step();
  const std::size_t radius = params_.match_radius();
  const std::size_t first = (j - 2) * 3 * B;  // 0-based start of y^{j-1}
  const std::size_t count = (3 * B + g - 1) / g;
  const SymbolView block = dec_.x_block(i);
  const SymbolView y = dec_.y().view();

  bool hit = false;
  for (std::size_t t = 0; t < count && !hit; ++t) {
    const std::size_t s = first + t * g;
    if (s + len > n) break;
    ++window_checks_;
    hit = ed_bounded(block, y.subspan(s, len), radius, &meter_).has_value();
  }
  slot = hit ? 1 : 0;
  return hit;
}

bool EditMatcher::full(std::size_t i, std::size_t j) {
  return partial(i, j) && !partial(i, j - 1);
}

MatchOracle EditMatcher::oracle() {
  return MatchOracle(dec_.x_blocks(), dec_.y_blocks(),
                     [this](std::size_t i, std::size_t j) { return full(i, j); });
}

namespace {

// Pushes every equal-symbol pair (r, s) with s in [lo, hi] (1-based,
// already clamped to y).
void add_row(const Text& x, const Text& y, std::size_t r, std::size_t lo, std::size_t hi,
             EdgeSet& T, std::uint64_t& compared) {
  const Symbol c = x[r - 1];
  for (std::size_t s = lo; s <= hi; ++s) {
    if (y[s - 1] == c) T.push_back({r, s});
  }
  if (hi >= lo) compared += hi - lo + 1;
}

}  // namespace

EditScript recover_edits(EditMatcher& matcher, const Alignment& E,
                         const RecoveryOptions& options, WorkMeter* meter) {
  const BlockDecomposition& dec = matcher.decomposition();
  const std::size_t B = dec.B();
  const std::size_t xlen = dec.x_length();
  const std::size_t ylen = dec.y_length();
  const Text x = dec.x().substr(0, xlen);
  const Text y = dec.y().substr(0, ylen);

  Alignment blocks = E;
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Edge& e = blocks[k];
    if (e.x < 1 || e.x > dec.x_blocks() || e.y < 1 || e.y > dec.y_blocks() ||
        !matcher.full(e.x, e.y)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "block pair (" + std::to_string(e.x) + ", " + std::to_string(e.y) +
                      ") is not a full edit match");
    }
  }

  EdgeSet T;
  std::uint64_t compared = 0;
  const std::size_t reach = 9 * B;
  auto clamp_lo = [](std::int64_t v) { return static_cast<std::size_t>(std::max<std::int64_t>(1, v)); };

  for (const Edge& e : blocks) {
    const std::size_t r0 = (e.x - 1) * 6 * B + 1;
    const std::size_t r1 = std::min(e.x * 6 * B, xlen);
    const std::size_t lo = clamp_lo(static_cast<std::int64_t>((e.y - 1) * 3 * B + 1) -
                                    static_cast<std::int64_t>(reach));
    const std::size_t hi = std::min(e.y * 3 * B + reach, ylen);
    for (std::size_t r = r0; r <= r1; ++r) add_row(x, y, r, lo, hi, T, compared);
  }

  if (options.interpolate_gaps) {
    // Anchor points (x offset, y offset): the ends of the strings and the two
    // ends of each matched x-block, placed where its full match says the
    // block starts in y (somewhere inside y^{j-1}; take the middle).
    struct Anchor {
      double x, y;
    };
    std::vector<Anchor> anchors{{0.0, 0.0}};
    for (const Edge& e : blocks) {
      const double xs = static_cast<double>((e.x - 1) * 6 * B);
      const double ys = static_cast<double>((e.y - 2) * 3 * B) + 1.5 * static_cast<double>(B);
      anchors.push_back({xs, ys});
      anchors.push_back({xs + 6.0 * static_cast<double>(B), ys + 6.0 * static_cast<double>(B)});
    }
    anchors.push_back({static_cast<double>(xlen), static_cast<double>(ylen)});

    // Gaps are the spans between an anchor at even index and the next one.
    for (std::size_t a = 0; a + 1 < anchors.size(); a += 2) {
      const Anchor L = anchors[a];
      const Anchor R = anchors[a + 1];
      const auto r0 = static_cast<std::size_t>(L.x) + 1;
      const auto r1 = std::min(static_cast<std::size_t>(R.x), xlen);
      if (r1 < r0) continue;
      const double slope = R.x > L.x ? (R.y - L.y) / (R.x - L.x) : 0.0;
      for (std::size_t r = r0; r <= r1; ++r) {
        const double c = L.y + (static_cast<double>(r) - L.x) * slope;
        const auto mid = static_cast<std::int64_t>(std::llround(c));
        const std::size_t lo = clamp_lo(mid - static_cast<std::int64_t>(reach));
        const std::int64_t top = std::min<std::int64_t>(mid + static_cast<std::int64_t>(reach),
                                                        static_cast<std::int64_t>(ylen));
        if (top < 1) continue;
        add_row(x, y, r, lo, static_cast<std::size_t>(top), T, compared);
      }
    }
  }

  if (meter != nullptr) meter->charge(compared);
  const Alignment A = max_restricted_alignment(std::move(T), meter);
  return script_from_alignment(x, y, A, options.merge_substitutions);
}

ApproxResult approx_ed(const Text& x, const Text& y, const PseudoParams& params, const Rng& rng,
                       const ApproxOptions& options) {
  ApproxResult out;
  out.params = params;
  if (params.clamped) {
    out.warnings.push_back("p below 1/B; clamped to p = 1/" + std::to_string(params.q));
  }
  const unsigned sigma = std::max(x.alphabet_size(), y.alphabet_size());
  const Text xs(x.symbols(), sigma);
  const Text ys(y.symbols(), sigma);

  const std::size_t n = std::max<std::size_t>({xs.size(), ys.size(), 2});
  out.repetitions = options.repetitions != 0
                        ? options.repetitions
                        : static_cast<std::uint32_t>(std::ceil(std::log2(static_cast<double>(n))));

  WorkMeter meter;
  out.script = script_from_alignment(xs, ys, {}, options.merge_substitutions);
  out.trivial = true;

  const BlockDecomposition dec(xs, ys, params.B);
  EditMatcher matcher(dec, params);
  const RecoveryOptions rec{options.interpolate_gaps, options.merge_substitutions};
  for (std::uint32_t rep = 0; rep < out.repetitions; ++rep) {
    Rng stream = rng.split(rep);
    MatchOracle f = matcher.oracle();
    const BlockAlignment E = solve_clean_alignment(f, stream, options.attempts_coeff);
    meter.charge(f.queries());
    out.oracle_evaluations += f.evaluations();
    EditScript s = recover_edits(matcher, E.pairs, rec, &meter);
    if (s.size() < out.script.size()) {
      out.script = std::move(s);
      out.trivial = false;
    }
  }
  out.estimate = out.script.size();
  out.work_units = meter.units() + matcher.units();
  return out;
}

}  // namespace pedit
