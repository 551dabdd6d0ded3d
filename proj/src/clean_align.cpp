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

#include "pedit/clean_align.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "pedit/error.hpp"

namespace pedit {

MatchOracle::MatchOracle(std::size_t u_len, std::size_t v_len, Predicate f)
    : u_len_(u_len), v_len_(v_len), f_(std::move(f)) {}

MatchOracle MatchOracle::from_edges(std::size_t u_len, std::size_t v_len,
                                    const EdgeSet& edges) {
  std::set<std::pair<std::size_t, std::size_t>> rel;
  for (const Edge& e : edges) {
    if (e.x < 1 || e.x > u_len || e.y < 1 || e.y > v_len) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(e.x) + ", " + std::to_string(e.y) +
                      ") is outside " + std::to_string(u_len) + " x " + std::to_string(v_len));
    }
    rel.emplace(e.x, e.y);
  }
  return MatchOracle(u_len, v_len, [rel = std::move(rel)](std::size_t i, std::size_t j) {
    return rel.count({i, j}) != 0;
  });
}

MatchOracle MatchOracle::from_matrix(std::vector<std::vector<bool>> matrix) {
  const std::size_t rows = matrix.size();
  const std::size_t cols = rows == 0 ? 0 : matrix[0].size();
  for (std::size_t r = 0; r < rows; ++r) {
    if (matrix[r].size() != cols) {
      throw Error(ErrorCode::kInvalidArgument,
                  "matrix row " + std::to_string(r + 1) + " has " +
                      std::to_string(matrix[r].size()) + " entries, expected " +
                      std::to_string(cols));
    }
  }
  return MatchOracle(rows, cols, [m = std::move(matrix)](std::size_t i, std::size_t j) {
    return static_cast<bool>(m[i - 1][j - 1]);
  });
}

bool MatchOracle::query(std::size_t i, std::size_t j) {
  ++queries_;
  const std::uint64_t key = static_cast<std::uint64_t>(i) * (v_len_ + 1) + j;
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  ++evaluations_;
  const bool r = f_(i, j);
  memo_.emplace(key, r);
  return r;
}

CleanCost alignment_cost(const Alignment& a, std::size_t u_len, std::size_t v_len) {
  CleanCost c;
  c.x_portion = u_len - a.size();
  std::size_t prev_y = 0;
  auto run = [&c](std::size_t len) {
    if (len >= kCleanWindow) c.y_portion += len - (kCleanWindow - 1);
  };
  for (const Edge& e : a) {
    run(e.y - prev_y - 1);
    prev_y = e.y;
  }
  run(v_len - prev_y);
  return c;
}

BlockAlignment solve_clean_alignment(MatchOracle& f, Rng& rng, std::uint32_t attempts_coeff) {
  const std::size_t n = std::max<std::size_t>({f.u_len(), f.v_len(), 2});
  const auto attempts = static_cast<std::uint64_t>(
      std::ceil(attempts_coeff * std::log2(static_cast<double>(n))));

  struct Task {
    std::size_t ul, ur, vl, vr;  // 1-based, inclusive; empty when l > r
    std::uint32_t depth;
  };
  std::vector<Task> stack{{1, f.u_len(), 1, f.v_len(), 0}};
  BlockAlignment out;
  std::vector<std::pair<Edge, std::uint32_t>> found;

  while (!stack.empty()) {
    const Task t = stack.back();
    stack.pop_back();
    const std::size_t ulen = t.ur + 1 - t.ul;
    const std::size_t vlen = t.vr + 1 - t.vl;
    if (ulen == 0 || vlen >= 8 * ulen + 12 || ulen >= 2 * vlen) continue;

    const std::size_t lo = (ulen + 3) / 4;
    const std::size_t hi = (3 * ulen + 3) / 4;
    for (std::uint64_t a = 0; a < attempts; ++a) {
      const std::size_t i = t.ul - 1 + rng.uniform(lo, hi);
      std::size_t hits = 0;
      std::size_t match = 0;
      for (std::size_t j = t.vl; j <= t.vr; ++j) {
        if (f.query(i, j)) {
          ++hits;
          match = j;
        }
      }
      if (hits != 1) continue;
      found.push_back({Edge{i, match}, t.depth});
      stack.push_back({i + 1, t.ur, match + 1, t.vr, t.depth + 1});
      stack.push_back({t.ul, i - 1, t.vl, match - 1, t.depth + 1});
      break;
    }
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first.x < b.first.x; });
  for (const auto& [e, d] : found) {
    out.pairs.push_back(e);
    out.depth.push_back(d);
  }
  return out;
}

CleanOptimum brute_force_clean_opt(MatchOracle& f) {
  const std::size_t nu = f.u_len();
  const std::size_t nv = f.v_len();
  if (nu > kCleanOracleLimit || nv > kCleanOracleLimit) {
    throw Error(ErrorCode::kGuardRefusal,
                "exhaustive clean optimum is limited to " + std::to_string(kCleanOracleLimit) +
                    " per side, got " + std::to_string(nu) + " x " + std::to_string(nv));
  }
  std::vector<std::size_t> row_deg(nu + 1, 0), col_deg(nv + 1, 0);
  EdgeSet all;
  for (std::size_t i = 1; i <= nu; ++i) {
    for (std::size_t j = 1; j <= nv; ++j) {
      if (f.query(i, j)) {
        ++row_deg[i];
        ++col_deg[j];
        all.push_back({i, j});
      }
    }
  }
  // Sentinels at both ends; eligible edges in x order (x and y are distinct).
  EdgeSet pts{{0, 0}};
  for (const Edge& e : all) {
    if (row_deg[e.x] == 1 && col_deg[e.y] == 1) pts.push_back(e);
  }
  pts.push_back({nu + 1, nv + 1});

  auto penalty = [](std::size_t run) -> std::uint64_t {
    return run >= kCleanWindow ? run - (kCleanWindow - 1) : 0;
  };
  const std::size_t last = pts.size() - 1;
  // best[k]: smallest y penalty minus matched count over chains ending at pts[k].
  std::vector<std::int64_t> best(pts.size(), 0);
  std::vector<bool> seen(pts.size(), false);
  std::vector<std::size_t> parent(pts.size(), 0);
  seen[0] = true;
  for (std::size_t k = 1; k <= last; ++k) {
    const std::int64_t gain = k == last ? 0 : 1;
    for (std::size_t l = 0; l < k; ++l) {
      if (!seen[l] || pts[l].x >= pts[k].x || pts[l].y >= pts[k].y) continue;
      const std::int64_t c =
          best[l] + static_cast<std::int64_t>(penalty(pts[k].y - pts[l].y - 1)) - gain;
      if (!seen[k] || c < best[k]) {
        best[k] = c;
        parent[k] = l;
        seen[k] = true;
      }
    }
  }

  CleanOptimum out;
  std::vector<Edge> chain;
  for (std::size_t k = parent[last]; k != 0; k = parent[k]) chain.push_back(pts[k]);
  std::reverse(chain.begin(), chain.end());
  out.alignment.pairs = chain;
  out.alignment.depth.assign(chain.size(), 0);
  out.cost = alignment_cost(chain, nu, nv);
  return out;
}

}  // namespace pedit
