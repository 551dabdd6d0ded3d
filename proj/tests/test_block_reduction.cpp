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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "pedit/block_reduction.hpp"
#include "pedit/clean_align.hpp"
#include "pedit/edit_distance.hpp"
#include "pedit/edit_script.hpp"
#include "pedit/error.hpp"
#include "pedit/harness.hpp"

namespace pedit {
namespace {

// partial(i, j) straight from the definition, with the full DP per window.
bool partial_oracle(const BlockDecomposition& dec, const PseudoParams& p, std::size_t i,
                    std::size_t j) {
  if (j < 2) return false;
  const std::size_t B = dec.B(), g = p.grid_step();
  const SymbolView xb = dec.x_block(i);
  const SymbolView y = dec.y().view();
  for (std::size_t s = (j - 2) * 3 * B; s < (j - 1) * 3 * B; s += g) {
    if (s + 6 * B > dec.padded_length()) break;
    if (ed_exact(xb, y.subspan(s, 6 * B)) <= p.match_radius()) return true;
  }
  return false;
}

TEST(PseudoParams, Thresholds) {
  const PseudoParams p = PseudoParams::make(4, 24);
  EXPECT_EQ(p.match_radius(), 0u);
  EXPECT_EQ(p.grid_step(), 1u);
  EXPECT_EQ(p.uniq_threshold(), 6u);
  const PseudoParams r = PseudoParams::make(1, 800);
  EXPECT_EQ(r.match_radius(), 100u);
  EXPECT_EQ(r.grid_step(), 8u);
  EXPECT_EQ(PseudoParams::make(2, 25).uniq_threshold(), 13u);
  EXPECT_FALSE(p.clamped);
}

TEST(PseudoParams, ClampsAndValidates) {
  const PseudoParams c = PseudoParams::make(64, 16);
  EXPECT_EQ(c.q, 16u);
  EXPECT_TRUE(c.clamped);
  EXPECT_THROW(PseudoParams::make(3, 16), Error);
  EXPECT_THROW(PseudoParams::make(0, 16), Error);
  EXPECT_THROW(PseudoParams::make(4, 0), Error);
}

TEST(ParseInverseP, Forms) {
  EXPECT_EQ(parse_inverse_p("1/4"), 4u);
  EXPECT_EQ(parse_inverse_p("0.25"), 4u);
  EXPECT_EQ(parse_inverse_p("1"), 1u);
  EXPECT_EQ(parse_inverse_p("2/8"), 4u);
  EXPECT_THROW(parse_inverse_p("abc"), Error);
  EXPECT_THROW(parse_inverse_p("0.3"), Error);
  EXPECT_THROW(parse_inverse_p("0"), Error);
}

TEST(BlockDecomposition, PadsToCommonMultiple) {
  Rng rng(1);
  const Text x = testing::random_text(100, 4, rng), y = testing::random_text(130, 4, rng);
  const BlockDecomposition d(x, y, 4);
  EXPECT_EQ(d.padded_length(), 144u);
  EXPECT_EQ(d.x_blocks(), 6u);
  EXPECT_EQ(d.y_blocks(), 12u);
  EXPECT_EQ(d.x().size(), 144u);
  EXPECT_EQ(d.y()[130], kPad);
  EXPECT_EQ(d.x_length(), 100u);
  EXPECT_EQ(d.x_block(2).size(), 24u);
  EXPECT_EQ(d.y_block(12).size(), 12u);
  EXPECT_EQ(BlockDecomposition(Text({}, 4), Text({}, 4), 5).padded_length(), 30u);
}

TEST(EditMatcher, IdenticalStringsFullyMatchOneBlockEach) {
  Rng rng(2);
  const Text x = testing::random_text(1536, 4, rng);
  const BlockDecomposition dec(x, x, 16);
  const PseudoParams p = PseudoParams::make(4, 16);
  EditMatcher m(dec, p);
  for (std::size_t i = 1; i <= dec.x_blocks(); ++i) {
    std::size_t full = 0;
    for (std::size_t j = 1; j <= dec.y_blocks(); ++j) {
      const bool expect = partial_oracle(dec, p, i, j);
      ASSERT_EQ(m.partial(i, j), expect) << i << "," << j;
      ASSERT_EQ(m.full(i, j), expect && !partial_oracle(dec, p, i, j - 1));
      full += m.full(i, j) ? 1 : 0;
    }
    EXPECT_EQ(full, 1u) << "block " << i;
    EXPECT_TRUE(m.full(i, 2 * i));
  }
}

TEST(EditMatcher, AgreesWithOracleOnEditedStrings) {
  Rng rng(3);
  const Text x = testing::random_text(960, 2, rng);
  Rng er = rng.split(1);
  const Text y = random_edits(x, 40, er);
  const BlockDecomposition dec(x, y, 20);
  const PseudoParams p = PseudoParams::make(1, 20);
  EditMatcher m(dec, p);
  for (std::size_t i = 1; i <= dec.x_blocks(); ++i) {
    for (std::size_t j = 1; j <= dec.y_blocks(); ++j) {
      ASSERT_EQ(m.partial(i, j), partial_oracle(dec, p, i, j)) << i << "," << j;
    }
  }
  EXPECT_FALSE(m.partial(1, 1));
  EXPECT_FALSE(m.full(1, 1));
}

TEST(EditMatcher, RandomizedRegionDoesNotMatch) {
  Rng rng(4);
  const Text x = testing::random_text(768, 4, rng);
  std::vector<Symbol> ys = x.symbols();
  for (std::size_t k = 0; k < ys.size(); ++k) ys[k] = static_cast<Symbol>(rng.uniform(0, 3));
  const Text y(std::move(ys), 4);
  const BlockDecomposition dec(x, y, 16);
  const PseudoParams p = PseudoParams::make(2, 16);
  EditMatcher m(dec, p);
  for (std::size_t i = 1; i <= dec.x_blocks(); ++i) {
    for (std::size_t j = 1; j <= dec.y_blocks(); ++j) {
      ASSERT_FALSE(partial_oracle(dec, p, i, j));
      ASSERT_FALSE(m.partial(i, j));
    }
  }
}

TEST(EditMatcher, GridRoundingKeepsCloseWindows) {
  // Grid step 8 and radius 100: a y shifted off the grid by up to 7 letters
  // is still found, since rounding costs at most 2 * 7 edits.
  Rng rng(5);
  const std::size_t B = 800;
  const Text x = testing::random_text(6 * B * 2, 4, rng);
  const PseudoParams p = PseudoParams::make(1, B);
  for (std::size_t shift = 1; shift < 8; ++shift) {
    std::vector<Symbol> ys(shift, 0);
    ys.insert(ys.end(), x.symbols().begin(), x.symbols().end());
    const Text y(std::move(ys), 4);
    const BlockDecomposition dec(x, y, B);
    EditMatcher m(dec, p);
    ASSERT_TRUE(m.partial(1, 2)) << shift;
    const SymbolView win = dec.y().view().subspan(0, 6 * B);
    EXPECT_LE(ed_exact(dec.x_block(1), win), 2 * shift);
  }
}

TEST(RecoverEdits, PerfectMatchingGivesEmptyScript) {
  Rng rng(6);
  const Text x = testing::random_text(1536, 4, rng);
  const BlockDecomposition dec(x, x, 16);
  EditMatcher m(dec, PseudoParams::make(4, 16));
  Alignment E;
  for (std::size_t i = 1; i <= dec.x_blocks(); ++i) E.push_back({i, 2 * i});
  EXPECT_TRUE(recover_edits(m, E).empty());
}

TEST(RecoverEdits, EmptyAlignmentDeletesAndInsertsEverything) {
  Rng rng(7);
  const Text x = testing::random_text(500, 4, rng), y = testing::random_text(450, 4, rng);
  const BlockDecomposition dec(x, y, 8);
  EditMatcher m(dec, PseudoParams::make(2, 8));
  const EditScript s = recover_edits(m, {});
  EXPECT_EQ(s.size(), 950u);
  EXPECT_EQ(apply_script(x, s), y);
}

TEST(RecoverEdits, RejectsEdgesThatAreNotFullMatches) {
  Rng rng(8);
  const Text x = testing::random_text(960, 4, rng), y = testing::random_text(960, 4, rng);
  const BlockDecomposition dec(x, y, 16);
  EditMatcher m(dec, PseudoParams::make(4, 16));
  try {
    recover_edits(m, {{1, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

// Median script length over 50 seeds with E from the clean alignment solver,
// n = 1536, B = 16, p = 1/4 and 20 random edits.
std::size_t median_recovered_length(const RecoveryOptions& opts) {
  std::vector<std::size_t> lengths;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(seed);
    const Text x = testing::random_text(1536, 4, rng);
    Rng er = rng.split(1);
    const Text y = random_edits(x, 20, er);
    const BlockDecomposition dec(x, y, 16);
    EditMatcher m(dec, PseudoParams::make(4, 16));
    MatchOracle f = m.oracle();
    Rng cr = rng.split(2);
    const BlockAlignment E = solve_clean_alignment(f, cr);
    const EditScript s = recover_edits(m, E.pairs, opts);
    EXPECT_EQ(apply_script(x, s), y);
    EXPECT_GE(s.size(), ed_exact(x, y));
    lengths.push_back(s.size());
  }
  std::nth_element(lengths.begin(), lengths.begin() + 25, lengths.end());
  return lengths[25];
}

TEST(RecoverEdits, MedianLengthWithGapInterpolation) {
  EXPECT_LE(median_recovered_length({true, true}), 160u);
}

TEST(RecoverEdits, LiteralWindowsStaySound) {
  // Radius floor(pB/8) = 0 here, so most blocks hit by an edit go unmatched
  // and the literal windows leave long gaps; only soundness is required.
  const std::size_t median = median_recovered_length({false, false});
  EXPECT_LE(median, 2u * 1536u + 20u);
}

TEST(ApproxEd, IdenticalStrings) {
  Rng rng(9);
  const Text x = testing::random_text(3072, 4, rng);
  const ApproxResult r = approx_ed(x, x, PseudoParams::make(4, 16), Rng(1));
  EXPECT_EQ(r.estimate, 0u);
  EXPECT_TRUE(r.script.empty());
  EXPECT_EQ(r.repetitions, 12u);
}

TEST(ApproxEd, UnrelatedStringsCappedByTrivialScript) {
  Rng rng(10);
  const Text x = testing::random_text(1000, 4, rng), y = testing::random_text(900, 4, rng);
  const ApproxResult r = approx_ed(x, y, PseudoParams::make(4, 16), Rng(2));
  EXPECT_LE(r.estimate, 1900u);
  EXPECT_GE(r.estimate, ed_exact(x, y));
  EXPECT_EQ(apply_script(x, r.script), y);
  EXPECT_EQ(r.estimate, r.script.size());
}

TEST(ApproxEd, RatioOnEditedRandomStrings) {
  // Pinned constant: estimate <= 4 * (1/p) * ed.
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Rng rng(seed);
    const Text x = testing::random_text(3072, 4, rng);
    Rng er = rng.split(1);
    const Text y = random_edits(x, 32, er);
    const std::uint64_t d = ed_exact(x, y);
    const ApproxResult r = approx_ed(x, y, PseudoParams::make(4, 16), rng.split(2));
    EXPECT_GE(r.estimate, d);
    EXPECT_LE(r.estimate, 16 * d);
    EXPECT_EQ(apply_script(x, r.script), y);
  }
}

TEST(ApproxEd, DeterministicPerSeedAndHandlesEmpty) {
  Rng rng(11);
  const Text x = testing::random_text(800, 4, rng);
  Rng er = rng.split(1);
  const Text y = random_edits(x, 10, er);
  const PseudoParams p = PseudoParams::make(2, 8);
  const ApproxResult a = approx_ed(x, y, p, Rng(3)), b = approx_ed(x, y, p, Rng(3));
  EXPECT_EQ(a.script, b.script);
  EXPECT_EQ(a.work_units, b.work_units);
  const Text empty({}, 4);
  EXPECT_EQ(approx_ed(empty, empty, p, Rng(1)).estimate, 0u);
  EXPECT_EQ(approx_ed(empty, y, p, Rng(1)).estimate, y.size());
}

TEST(ApproxEd, ClampedParamsWarn) {
  Rng rng(12);
  const Text x = testing::random_text(300, 4, rng);
  const ApproxResult r = approx_ed(x, x, PseudoParams::make(64, 8), Rng(1));
  EXPECT_TRUE(r.params.clamped);
  EXPECT_FALSE(r.warnings.empty());
}

}  // namespace
}  // namespace pedit
