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

#ifndef PEDIT_RNG_HPP
#define PEDIT_RNG_HPP

#include <cstdint>
#include <random>

namespace pedit {

/// Seeded generator with deterministic splitting. A child stream is a pure
/// function of the parent's seed and the stream id, so the draws of a
/// sub-computation do not depend on how many values the parent consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0);

  Rng split(std::uint64_t stream) const;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform on the closed range [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  /// Uniform on [0, 1).
  double real();
  bool bernoulli(double p) { return real() < p; }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace pedit

#endif  // PEDIT_RNG_HPP
