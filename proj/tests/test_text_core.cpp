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

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "pedit/edit_distance.hpp"
#include "pedit/edit_script.hpp"
#include "pedit/error.hpp"
#include "pedit/harness.hpp"
#include "pedit/text.hpp"
#include "pedit/work_meter.hpp"

namespace pedit {
namespace {

const Alphabet kLower("abcdefghijklmnopqrstuvwxyz");

Text lower(std::string_view s) { return kLower.encode(s); }

TEST(Alphabet, EncodeDecodeRoundTrip) {
  const Alphabet a("ACGT");
  const Text t = a.encode("GATTACA");
  EXPECT_EQ(t.size(), 7u);
  EXPECT_EQ(t[0], 2);
  EXPECT_EQ(a.decode(t), "GATTACA");
}

TEST(Alphabet, RejectsUnknownByteAndDuplicates) {
  const Alphabet a("AC");
  try {
    a.encode("ACGA");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
    EXPECT_NE(std::string(e.what()).find("offset 2"), std::string::npos);
  }
  EXPECT_THROW(Alphabet("AA"), Error);
  EXPECT_THROW(Alphabet(""), Error);
}

TEST(Alphabet, StandardAndDetect) {
  EXPECT_EQ(Alphabet::standard(2).chars(), "AC");
  EXPECT_EQ(Alphabet::standard(4).chars(), "ACGT");
  EXPECT_EQ(Alphabet::standard(26).chars(), "abcdefghijklmnopqrstuvwxyz");
  const std::vector<std::string> samples{"banana", "cab"};
  EXPECT_EQ(Alphabet::detect(samples).chars(), "abcn");
}

TEST(Text, PadNeverCollidesWithCodes) {
  EXPECT_LT(kMaxAlphabetSize, kPad);
  const Text t({0, 1}, 2);
  const Text p = t.padded_to(5);
  ASSERT_EQ(p.size(), 5u);
  EXPECT_EQ(p[4], kPad);
  EXPECT_EQ(t.padded_to(1), t);
}

TEST(Text, ChecksumSeparatesContentAndLength) {
  const Text a({0, 1, 2}, 4), b({0, 1, 3}, 4), c({0, 1}, 4);
  EXPECT_NE(a.checksum(), b.checksum());
  EXPECT_NE(a.checksum(), c.checksum());
  EXPECT_EQ(a.checksum(), Text({0, 1, 2}, 4).checksum());
}

TEST(TextFiles, RawAndLines) {
  const auto dir = std::filesystem::temp_directory_path() / "pedit_text_files";
  std::filesystem::create_directories(dir);
  const auto raw = (dir / "raw.txt").string();
  const auto lines = (dir / "lines.txt").string();
  write_string(raw, "ACGT\n");
  write_string(lines, "AC\nGT\n");
  EXPECT_EQ(read_strings(raw, TextFormat::kRaw), std::vector<std::string>{"ACGT"});
  EXPECT_EQ(read_strings(lines, TextFormat::kLines), (std::vector<std::string>{"AC", "GT"}));
  try {
    read_strings((dir / "missing.txt").string(), TextFormat::kRaw);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
    EXPECT_NE(std::string(e.what()).find("missing.txt"), std::string::npos);
  }
}

TEST(EdExact, SmallCases) {
  EXPECT_EQ(ed_exact(lower("abc"), lower("abc")), 0u);
  EXPECT_EQ(ed_exact(lower(""), lower("abc")), 3u);
  EXPECT_EQ(testing::ed_recursive(lower("kitten"), lower("sitting")), 3u);
  EXPECT_EQ(ed_exact(lower("kitten"), lower("sitting")), 3u);
}

TEST(EdExact, AgreesWithRecursiveOracle) {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const unsigned sigma = t % 3 == 0 ? 2 : 4;
    const Text u = testing::random_text(rng.uniform(0, 30), sigma, rng);
    const Text v = testing::random_text(rng.uniform(0, 30), sigma, rng);
    ASSERT_EQ(ed_exact(u, v), testing::ed_recursive(u, v));
  }
}

TEST(EdExact, ChargesOneUnitPerCell) {
  WorkMeter m;
  ed_exact(lower("abcd"), lower("abc"), &m);
  EXPECT_EQ(m.units(), 12u);
}

TEST(EdExactScript, ScriptLengthEqualsDistanceAndRoundTrips) {
  Rng rng(12);
  for (int t = 0; t < 1000; ++t) {
    const unsigned sigma = t % 2 == 0 ? 2 : 26;
    const Text u = testing::random_text(rng.uniform(0, 40), sigma, rng);
    const Text v = testing::random_text(rng.uniform(0, 40), sigma, rng);
    const auto r = ed_exact_script(u, v);
    ASSERT_EQ(r.distance, ed_exact(u, v));
    ASSERT_EQ(r.script.size(), r.distance);
    ASSERT_EQ(apply_script(u, r.script), v);
  }
}

TEST(EdBounded, Examples) {
  EXPECT_EQ(ed_bounded(lower("abc"), lower("abd"), 0), std::nullopt);
  EXPECT_EQ(ed_bounded(lower("abc"), lower("abc"), 0), std::optional<std::uint64_t>(0));
  EXPECT_EQ(ed_bounded(lower("kitten"), lower("sitting"), 3), std::optional<std::uint64_t>(3));
  EXPECT_EQ(ed_bounded(lower("kitten"), lower("sitting"), 2), std::nullopt);
  EXPECT_EQ(ed_bounded(lower(""), lower("ab"), 2), std::optional<std::uint64_t>(2));
}

TEST(EdBounded, AgreesWithExactOnRandomPairs) {
  Rng rng(13);
  for (int t = 0; t < 500; ++t) {
    const unsigned sigma = t % 3 == 0 ? 2 : (t % 3 == 1 ? 4 : 26);
    const Text u = testing::random_text(rng.uniform(0, 60), sigma, rng);
    Rng er = rng.split(t);
    const Text v = t % 2 ? testing::random_text(rng.uniform(0, 60), sigma, rng)
                         : random_edits(u, rng.uniform(0, 8), er);
    const std::uint64_t d = ed_exact(u, v);
    const std::uint64_t k = rng.uniform(0, 70);
    const auto b = ed_bounded(u, v, k);
    if (d <= k) {
      ASSERT_EQ(b, std::optional<std::uint64_t>(d)) << "k=" << k;
    } else {
      ASSERT_EQ(b, std::nullopt) << "k=" << k;
    }
  }
}

TEST(EdBoundedBudgeted, EqualStringsNeedLinearWork) {
  Rng rng(14);
  const Text x = testing::random_text(200, 4, rng);
  EXPECT_EQ(ed_bounded_budgeted(x, x, 0), std::nullopt);
  EXPECT_EQ(ed_bounded_budgeted(x, x, 199), std::nullopt);
  const auto r = ed_bounded_budgeted(x, x, 200);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->distance, 0u);
  EXPECT_TRUE(r->script.empty());
}

TEST(EdBoundedBudgeted, FarPairExceedsLinearBudget) {
  Rng rng(15);
  const std::size_t n = 1000;
  const Text x = testing::random_text(n, 4, rng);
  Rng er = rng.split(1);
  const Text y = random_edits(x, n / 2, er);
  ASSERT_GE(ed_exact(x, y), n / 4);
  WorkMeter m;
  EXPECT_EQ(ed_bounded_budgeted(x, y, n, &m), std::nullopt);
  EXPECT_LE(m.units(), n);
}

TEST(EdBoundedBudgeted, ClosePairFitsAndScriptRoundTrips) {
  Rng rng(16);
  const std::size_t n = 1000;
  const Text x = testing::random_text(n, 4, rng);
  Rng er = rng.split(1);
  const Text y = random_edits(x, 2, er);
  const std::uint64_t d = ed_exact(x, y);
  WorkMeter m;
  const auto r = ed_bounded_budgeted(x, y, 100 * n, &m);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->distance, d);
  EXPECT_EQ(apply_script(x, r->script), y);
  EXPECT_LE(m.units(), 3 * n);
}

TEST(LowDistanceRun, SlicedRunMatchesSingleRun) {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const Text u = testing::random_text(rng.uniform(50, 300), 4, rng);
    Rng er = rng.split(t);
    const Text v = random_edits(u, rng.uniform(0, 40), er);
    LowDistanceRun run(u, v);
    std::uint64_t limit = 0;
    while (!run.advance(limit += 37)) {
      ASSERT_LE(run.units(), limit);
      ASSERT_LE(run.lower_bound(), ed_exact(u, v));
    }
    ASSERT_EQ(run.distance(), ed_exact(u, v));
    ASSERT_EQ(apply_script(u, run.script()), v);
  }
}

TEST(ApplyScript, Examples) {
  EXPECT_EQ(kLower.decode(apply_script(lower("abc"), {EditOp::sub(1, 23)})), "xbc");
  EXPECT_EQ(apply_script(lower("abc"), {}), lower("abc"));
  EXPECT_EQ(kLower.decode(apply_script(lower("abc"), {EditOp::ins(4, 3), EditOp::del(1)})),
            "bcd");
}

TEST(ApplyScript, ReportsOffendingOp) {
  try {
    apply_script(lower("abc"), {EditOp::del(1), EditOp::del(3)});
    FAIL();
  } catch (const ScriptError& e) {
    EXPECT_EQ(e.index(), 1u);
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
  EXPECT_THROW(apply_script(lower("abc"), {EditOp::ins(5, 0)}), ScriptError);
  EXPECT_THROW(apply_script(lower("abc"), {EditOp::sub(0, 0)}), ScriptError);
}

TEST(ApplyScript, FormatsOnePerLine) {
  const EditScript s{EditOp::sub(3, 1), EditOp::del(2), EditOp::ins(1, 0)};
  EXPECT_EQ(format_script(s, Alphabet("AC")), "S 3 C\nD 2\nI 1 A\n");
}

TEST(Rng, SplitIsIndependentOfParentConsumption) {
  Rng a(5), b(5);
  b.next();
  b.next();
  EXPECT_EQ(a.split(3).next(), b.split(3).next());
  EXPECT_NE(a.split(3).next(), a.split(4).next());
  Rng c(9);
  for (int i = 0; i < 1000; ++i) {
    const auto v = c.uniform(3, 7);
    ASSERT_GE(v, 3u);
    ASSERT_LE(v, 7u);
  }
}

}  // namespace
}  // namespace pedit
