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

#include "pedit/clean_align.hpp"
#include "pedit/error.hpp"

namespace pedit {
namespace {

// The comparison function drawn in the clean alignment figure (15 x 15).
const EdgeSet kFigureEdges{{2, 4}, {3, 9}, {6, 4}, {8, 7}, {9, 6}, {9, 10}, {12, 12}};

MatchOracle figure_oracle() { return MatchOracle::from_edges(15, 15, kFigureEdges); }

TEST(AlignmentCost, FigureExamples) {
  const CleanCost b = alignment_cost({{3, 9}, {12, 12}}, 15, 15);
  EXPECT_EQ(b.x_portion, 13u);
  EXPECT_EQ(b.y_portion, 2u);
  EXPECT_EQ(b.total(), 15u);
  // The other drawn alignment: y_1..y_6 is the longest unmatched run, so no
  // 7-window is free.
  const CleanCost c = alignment_cost({{8, 7}, {12, 12}}, 15, 15);
  EXPECT_EQ(c.x_portion, 13u);
  EXPECT_EQ(c.y_portion, 0u);
}

TEST(AlignmentCost, TrivialCases) {
  EXPECT_EQ(alignment_cost({}, 1, 7), (CleanCost{1, 1}));
  EXPECT_EQ(alignment_cost({}, 0, 6), (CleanCost{0, 0}));
  EXPECT_EQ(alignment_cost({}, 3, 20), (CleanCost{3, 14}));
  Alignment diag;
  for (std::size_t i = 1; i <= 10; ++i) diag.push_back({i, 2 * i});
  EXPECT_EQ(alignment_cost(diag, 10, 20), (CleanCost{0, 0}));
}

TEST(MatchOracle, MemoizesEvaluations) {
  int calls = 0;
  MatchOracle f(3, 3, [&](std::size_t i, std::size_t j) {
    ++calls;
    return i == j;
  });
  EXPECT_TRUE(f.query(2, 2));
  EXPECT_TRUE(f.query(2, 2));
  EXPECT_FALSE(f.query(1, 3));
  EXPECT_EQ(calls, 2);
  EXPECT_EQ(f.evaluations(), 2u);
  EXPECT_EQ(f.queries(), 3u);
}

TEST(MatchOracle, ValidatesInput) {
  EXPECT_THROW(MatchOracle::from_edges(3, 3, {{4, 1}}), Error);
  EXPECT_THROW(MatchOracle::from_edges(3, 3, {{0, 1}}), Error);
  EXPECT_THROW(MatchOracle::from_matrix({{true, false}, {true}}), Error);
  auto f = MatchOracle::from_matrix({{false, true}, {true, false}});
  EXPECT_TRUE(f.query(1, 2));
  EXPECT_FALSE(f.query(1, 1));
}

TEST(SolveCleanAlignment, EmptyRelation) {
  MatchOracle f(20, 25, [](std::size_t, std::size_t) { return false; });
  Rng rng(1);
  EXPECT_TRUE(solve_clean_alignment(f, rng).pairs.empty());
}

TEST(SolveCleanAlignment, IdentityGivesFullDiagonal) {
  for (std::size_t n : {1u, 2u, 7u, 33u, 64u}) {
    MatchOracle f(n, n, [](std::size_t i, std::size_t j) { return i == j; });
    Rng rng(n);
    const BlockAlignment a = solve_clean_alignment(f, rng);
    ASSERT_EQ(a.pairs.size(), n);
    ASSERT_TRUE(is_non_crossing(a.pairs));
    EXPECT_EQ(alignment_cost(a.pairs, n, n).total(), 0u);
    ASSERT_EQ(a.depth.size(), a.pairs.size());
  }
}

TEST(SolveCleanAlignment, OutputIsNonCrossingOverTrueEdges) {
  Rng gen(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t nu = gen.uniform(1, 60), nv = gen.uniform(1, 60);
    EdgeSet e;
    for (std::size_t i = 1; i <= nu; ++i) {
      for (std::size_t j = 1; j <= nv; ++j) {
        if (gen.bernoulli(0.05)) e.push_back({i, j});
      }
    }
    auto f = MatchOracle::from_edges(nu, nv, e);
    Rng rng(t);
    const BlockAlignment a = solve_clean_alignment(f, rng);
    ASSERT_TRUE(is_non_crossing(a.pairs));
    for (const auto& p : a.pairs) ASSERT_TRUE(std::binary_search(e.begin(), e.end(), p));
  }
}

TEST(SolveCleanAlignment, DeterministicPerSeed) {
  auto f = figure_oracle(), g = figure_oracle();
  Rng a(77), b(77);
  EXPECT_EQ(solve_clean_alignment(f, a).pairs, solve_clean_alignment(g, b).pairs);
}

TEST(SolveCleanAlignment, FigureInstanceMeanCost) {
  auto opt_oracle = figure_oracle();
  const std::uint64_t opt = brute_force_clean_opt(opt_oracle).cost.total();
  double total = 0;
  for (int run = 0; run < 200; ++run) {
    auto f = figure_oracle();
    Rng rng = Rng(2026).split(run);
    total += static_cast<double>(alignment_cost(solve_clean_alignment(f, rng).pairs, 15, 15).total());
  }
  EXPECT_LE(total / 200, 3.0 * static_cast<double>(opt));
}

TEST(BruteForceCleanOpt, EmptyRelation) {
  for (auto [nu, nv] : {std::pair<std::size_t, std::size_t>{5, 3}, {4, 30}, {0, 9}}) {
    MatchOracle f(nu, nv, [](std::size_t, std::size_t) { return false; });
    const CleanOptimum o = brute_force_clean_opt(f);
    EXPECT_TRUE(o.alignment.pairs.empty());
    EXPECT_EQ(o.cost.total(), nu + (nv > 6 ? nv - 6 : 0));
  }
}

TEST(BruteForceCleanOpt, FigureEligibleEdgesAndOptimum) {
  auto f = figure_oracle();
  const CleanOptimum o = brute_force_clean_opt(f);
  // Degree-one edges of the drawn relation.
  const EdgeSet eligible{{3, 9}, {8, 7}, {12, 12}};
  for (const auto& p : o.alignment.pairs) {
    EXPECT_NE(std::find(eligible.begin(), eligible.end(), p), eligible.end());
  }
  // Enumerate every non-crossing subset of the eligible edges.
  std::uint64_t best = ~std::uint64_t{0};
  for (unsigned mask = 0; mask < 8; ++mask) {
    Alignment a;
    for (unsigned k = 0; k < 3; ++k) {
      if (mask & (1u << k)) a.push_back(eligible[k]);
    }
    std::sort(a.begin(), a.end());
    if (!is_non_crossing(a)) continue;
    best = std::min(best, alignment_cost(a, 15, 15).total());
  }
  EXPECT_EQ(best, 13u);
  EXPECT_EQ(o.cost.total(), best);
  EXPECT_EQ(o.alignment.pairs, (Alignment{{8, 7}, {12, 12}}));
}

TEST(BruteForceCleanOpt, GuardRefusesLargeSides) {
  MatchOracle f(kCleanOracleLimit + 1, 4, [](std::size_t, std::size_t) { return false; });
  try {
    brute_force_clean_opt(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardRefusal);
  }
}

}  // namespace
}  // namespace pedit
