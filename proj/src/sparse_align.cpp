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

#include "pedit/sparse_align.hpp"

#include <algorithm>
#include <string>

#include "pedit/error.hpp"

namespace pedit {

bool is_non_crossing(const Alignment& a) {
  for (std::size_t k = 1; k < a.size(); ++k) {
    if (a[k].x <= a[k - 1].x || a[k].y <= a[k - 1].y) return false;
  }
  return true;
}

Alignment max_restricted_alignment(EdgeSet edges, WorkMeter* meter) {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.x != b.x ? a.x < b.x : a.y > b.y;
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (meter != nullptr) meter->charge(2 * edges.size());

  // tails[l] = index of the edge ending the best chain of length l + 1 with
  // the smallest final y. Since equal x come with decreasing y, a strictly
  // increasing chain in y never uses one x twice.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> tails;
  std::vector<std::size_t> parent(edges.size(), kNone);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::size_t y = edges[k].y;
    auto it = std::lower_bound(tails.begin(), tails.end(), y,
                               [&edges](std::size_t idx, std::size_t val) {
                                 return edges[idx].y < val;
                               });
    const auto len = static_cast<std::size_t>(it - tails.begin());
    if (len > 0) parent[k] = tails[len - 1];
    if (it == tails.end()) {
      tails.push_back(k);
    } else {
      *it = k;
    }
  }

  Alignment out(tails.size());
  std::size_t k = tails.empty() ? kNone : tails.back();
  for (std::size_t pos = out.size(); pos-- > 0;) {
    out[pos] = edges[k];
    k = parent[k];
  }
  return out;
}

EditScript script_from_alignment(const Text& u, const Text& v, const Alignment& a,
                                 bool merge_substitutions) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Edge& e = a[k];
    if (e.x < 1 || e.x > u.size() || e.y < 1 || e.y > v.size()) {
      throw ScriptError(k, "alignment pair #" + std::to_string(k) + " (" +
                               std::to_string(e.x) + ", " + std::to_string(e.y) +
                               ") is outside the strings");
    }
    if (k > 0 && (e.x <= a[k - 1].x || e.y <= a[k - 1].y)) {
      throw ScriptError(k, "alignment pair #" + std::to_string(k) + " crosses its predecessor");
    }
    if (u[e.x - 1] != v[e.y - 1]) {
      throw ScriptError(k, "alignment pair #" + std::to_string(k) + " (" +
                               std::to_string(e.x) + ", " + std::to_string(e.y) +
                               ") joins different symbols");
    }
  }

  EditScript ops;
  // Walk the gaps right to left so every op position is a source coordinate.
  std::size_t right_x = u.size() + 1;
  std::size_t right_y = v.size() + 1;
  for (std::size_t k = a.size() + 1; k-- > 0;) {
    const std::size_t left_x = k == 0 ? 0 : a[k - 1].x;
    const std::size_t left_y = k == 0 ? 0 : a[k - 1].y;
    const std::size_t dels = right_x - left_x - 1;
    const std::size_t inss = right_y - left_y - 1;
    const std::size_t subs = merge_substitutions ? std::min(dels, inss) : 0;

    // Gap occupies u[left_x + 1 .. right_x - 1] and v[left_y + 1 .. right_y - 1].
    for (std::size_t p = right_x - 1; p > left_x + subs; --p) ops.push_back(EditOp::del(p));
    for (std::size_t q = right_y - 1; q > left_y + subs; --q) {
      ops.push_back(EditOp::ins(left_x + subs + 1, v[q - 1]));
    }
    for (std::size_t s = subs; s > 0; --s) {
      ops.push_back(EditOp::sub(left_x + s, v[left_y + s - 1]));
    }
    right_x = left_x;
    right_y = left_y;
  }
  return ops;
}

}  // namespace pedit
