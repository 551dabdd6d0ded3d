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

#include "pedit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pedit/block_reduction.hpp"
#include "pedit/edit_distance.hpp"
#include "pedit/error.hpp"
#include "pedit/param_detect.hpp"

namespace pedit {

namespace {

constexpr std::uint64_t kEditStream = 1;
constexpr std::uint64_t kPlantStream = 2;
constexpr std::uint64_t kBenchEditStream = 7;

std::vector<Symbol> uniform_symbols(std::size_t n, unsigned sigma, Rng& rng) {
  std::vector<Symbol> out(n);
  for (auto& s : out) s = static_cast<Symbol>(rng.uniform(0, sigma - 1));
  return out;
}

}  // namespace

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::kUniform:
      return "uniform";
    case GenKind::kEditsFromX:
      return "edits-from-x";
    case GenKind::kSmoothed:
      return "smoothed";
    case GenKind::kPlantedDuplicates:
      return "planted-duplicates";
  }
  return "unknown";
}

GenKind parse_gen_kind(const std::string& name) {
  for (GenKind k : {GenKind::kUniform, GenKind::kEditsFromX, GenKind::kSmoothed,
                    GenKind::kPlantedDuplicates}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown generator kind '" + name +
                  "' (expected uniform, edits-from-x, smoothed or planted-duplicates)");
}

Text random_edits(const Text& x, std::size_t k, Rng& rng) {
  const unsigned sigma = x.alphabet_size();
  std::vector<Symbol> s = x.symbols();
  for (std::size_t e = 0; e < k; ++e) {
    auto kind = rng.uniform(0, 2);
    if (s.empty()) kind = 1;
    if (kind == 2 && sigma < 2) kind = 1;
    if (kind == 0) {
      const auto pos = static_cast<std::ptrdiff_t>(rng.uniform(0, s.size() - 1));
      s.erase(s.begin() + pos);
    } else if (kind == 1) {
      const auto pos = static_cast<std::ptrdiff_t>(rng.uniform(0, s.size()));
      s.insert(s.begin() + pos, static_cast<Symbol>(rng.uniform(0, sigma - 1)));
    } else {
      const auto pos = static_cast<std::size_t>(rng.uniform(0, s.size() - 1));
      s[pos] = static_cast<Symbol>((s[pos] + 1 + rng.uniform(0, sigma - 2)) % sigma);
    }
  }
  return Text(std::move(s), sigma);
}

std::size_t plant_duplicates(std::vector<Symbol>& x, std::size_t scale, double fraction,
                             Rng& rng) {
  if (scale == 0) throw Error(ErrorCode::kInvalidArgument, "planting scale must be positive");
  if (!(fraction >= 0.0 && fraction <= 0.5)) {
    throw Error(ErrorCode::kInvalidArgument, "planted fraction must lie in [0, 0.5]");
  }
  const std::size_t unit = 6 * scale;
  const std::size_t blocks = x.size() / unit;
  if (blocks < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "planting needs at least two blocks of " + std::to_string(unit) + " letters");
  }
  const auto wanted = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(blocks)));
  const std::size_t count = std::min(std::max<std::size_t>(1, wanted), blocks / 2);

  std::vector<std::size_t> order(blocks);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng.engine());
  // The first `count` blocks are overwritten, each by one of the untouched rest.
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t src = order[count + rng.uniform(0, blocks - count - 1)];
    std::copy_n(x.begin() + static_cast<std::ptrdiff_t>(src * unit), unit,
                x.begin() + static_cast<std::ptrdiff_t>(order[t] * unit));
  }
  return count;
}

Generated generate(const GenSpec& spec) {
  if (spec.n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  if (spec.alphabet < 2 || spec.alphabet > kMaxAlphabetSize) {
    throw Error(ErrorCode::kInvalidArgument,
                "alphabet size must lie in [2, " + std::to_string(kMaxAlphabetSize) + "]");
  }
  Rng rng(spec.seed);
  Generated out;
  switch (spec.kind) {
    case GenKind::kUniform:
      out.x = Text(uniform_symbols(spec.n, spec.alphabet, rng), spec.alphabet);
      break;
    case GenKind::kEditsFromX: {
      out.x = Text(uniform_symbols(spec.n, spec.alphabet, rng), spec.alphabet);
      Rng edits = rng.split(kEditStream);
      out.y = random_edits(out.x, spec.k, edits);
      break;
    }
    case GenKind::kSmoothed: {
      if (!(spec.p_perturb >= 0.0 && spec.p_perturb <= 1.0)) {
        throw Error(ErrorCode::kInvalidArgument, "p_perturb must lie in [0, 1]");
      }
      if (spec.period == 0) throw Error(ErrorCode::kInvalidArgument, "period must be positive");
      const std::vector<Symbol> base = uniform_symbols(spec.period, spec.alphabet, rng);
      std::vector<Symbol> s(spec.n);
      for (std::size_t i = 0; i < spec.n; ++i) {
        s[i] = base[i % spec.period];
        if (rng.bernoulli(spec.p_perturb)) {
          s[i] = static_cast<Symbol>(rng.uniform(0, spec.alphabet - 1));
        }
      }
      out.x = Text(std::move(s), spec.alphabet);
      break;
    }
    case GenKind::kPlantedDuplicates: {
      std::vector<Symbol> s = uniform_symbols(spec.n, spec.alphabet, rng);
      Rng plant = rng.split(kPlantStream);
      plant_duplicates(s, spec.scale, spec.fraction, plant);
      out.x = Text(std::move(s), spec.alphabet);
      break;
    }
  }
  return out;
}

BenchConfig parse_bench_config(const std::string& json_text) {
  BenchConfig cfg;
  try {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    const auto& seeds = j.at("seeds");
    if (seeds.is_number_unsigned()) {
      for (std::uint64_t s = 1; s <= seeds.get<std::uint64_t>(); ++s) cfg.seeds.push_back(s);
    } else {
      cfg.seeds = seeds.get<std::vector<std::uint64_t>>();
    }
    cfg.exact_oracle = j.value("exact_oracle", true);
    std::size_t idx = 0;
    for (const auto& c : j.value("cells", nlohmann::json::array())) {
      BenchCell cell;
      cell.id = c.value("id", "cell" + std::to_string(idx));
      cell.gen.kind = parse_gen_kind(c.value("kind", std::string("edits-from-x")));
      cell.gen.n = c.at("n").get<std::size_t>();
      cell.gen.alphabet = c.value("alphabet", 4u);
      cell.gen.k = c.value("k", std::size_t{0});
      cell.gen.p_perturb = c.value("p_perturb", 0.1);
      cell.gen.period = c.value("period", std::size_t{16});
      cell.gen.scale = c.value("scale", std::size_t{16});
      cell.gen.fraction = c.value("fraction", 0.05);
      cell.algorithm = c.value("algorithm", std::string("approx"));
      cell.q = parse_inverse_p(c.value("p", std::string("1/4")));
      cell.B = c.value("B", std::size_t{16});
      cell.alpha = c.value("alpha", std::uint64_t{4});
      cell.reps = c.value("reps", 0u);
      if (cell.algorithm != "approx" && cell.algorithm != "detect" &&
          cell.algorithm != "preprocess-query" && cell.algorithm != "exact") {
        throw Error(ErrorCode::kInvalidArgument,
                    "cell '" + cell.id + "': unknown algorithm '" + cell.algorithm + "'");
      }
      cfg.cells.push_back(std::move(cell));
      ++idx;
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed bench config: ") + e.what());
  }
  return cfg;
}

BenchConfig load_bench_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open bench config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_bench_config(ss.str());
}

namespace {

BenchRecord run_one(const BenchCell& cell, std::uint64_t seed, bool exact_oracle, bool force) {
  const auto t0 = std::chrono::steady_clock::now();
  GenSpec g = cell.gen;
  g.seed = seed;
  Generated inst = generate(g);
  Text y;
  if (inst.y) {
    y = *inst.y;
  } else {
    Rng edits = Rng(seed).split(kBenchEditStream);
    y = random_edits(inst.x, g.k, edits);
  }
  const Text& x = inst.x;

  BenchRecord r;
  r.cell = cell.id;
  r.seed = seed;
  r.kind = to_string(g.kind);
  r.algorithm = cell.algorithm;
  r.n = x.size();
  const Rng rng(seed);
  if (cell.algorithm == "approx") {
    const PseudoParams params = PseudoParams::make(cell.q, cell.B);
    r.params = "p=1/" + std::to_string(params.q) + ";B=" + std::to_string(params.B);
    ApproxOptions opt;
    opt.repetitions = cell.reps;
    const ApproxResult a = approx_ed(x, y, params, rng, opt);
    r.estimate = a.estimate;
    r.work_units = a.work_units;
  } else if (cell.algorithm == "detect") {
    r.params = "alpha=" + std::to_string(cell.alpha);
    const DetectResult d = detect_single_shot(x, y, cell.alpha, rng);
    r.estimate = d.estimate;
    r.work_units = d.work_units;
  } else if (cell.algorithm == "preprocess-query") {
    r.params = "alpha=" + std::to_string(cell.alpha);
    const SourceProfile prof = preprocess_source(x, cell.alpha, rng);
    const DetectResult d = query_source(prof, x, y, rng.split(1));
    r.estimate = d.estimate;
    std::uint64_t pre = 0;
    for (const LevelAudit& l : prof.levels) pre += l.units;
    r.work_units = pre + d.work_units;
  } else {
    const std::uint64_t cells = static_cast<std::uint64_t>(x.size()) * y.size();
    if (cells > kBenchExactCellLimit && !force) {
      throw Error(ErrorCode::kGuardRefusal,
                  "cell '" + cell.id + "': exact DP over " + std::to_string(cells) +
                      " cells exceeds the bench guard; use force");
    }
    WorkMeter m;
    r.estimate = ed_exact(x, y, &m);
    r.work_units = m.units();
    r.true_distance = r.estimate;
  }

  if (exact_oracle && !r.true_distance) {
    const std::uint64_t cells = static_cast<std::uint64_t>(x.size()) * y.size();
    if (cells <= kBenchExactCellLimit || force) r.true_distance = ed_exact(x, y);
  }
  if (r.true_distance) {
    r.ratio = static_cast<double>(r.estimate) /
              static_cast<double>(std::max<std::uint64_t>(1, *r.true_distance));
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config, unsigned jobs, bool force) {
  const std::size_t total = config.cells.size() * config.seeds.size();
  std::vector<BenchRecord> records(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&]() {
    for (std::size_t t = next++; t < total; t = next++) {
      const std::size_t c = t / config.seeds.size();
      const std::size_t s = t % config.seeds.size();
      try {
        records[t] = run_one(config.cells[c], config.seeds[s], config.exact_oracle, force);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };
  const unsigned n_threads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return a.cell != b.cell ? a.cell < b.cell : a.seed < b.seed;
  });
  return records;
}

void write_bench_csv(const std::string& path, const std::vector<BenchRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << "schema_version,cell,seed,kind,algorithm,n,params,true_distance,estimate,ratio,"
         "work_units,wall_ms\n";
  for (const BenchRecord& r : records) {
    out << kBenchSchemaVersion << ',' << r.cell << ',' << r.seed << ',' << r.kind << ','
        << r.algorithm << ',' << r.n << ',' << r.params << ',';
    if (r.true_distance) out << *r.true_distance;
    out << ',' << r.estimate << ',';
    if (r.ratio) out << *r.ratio;
    out << ',' << r.work_units << ',' << r.wall_ms << '\n';
  }
  if (!out) throw Error(ErrorCode::kIo, "failed while writing '" + path + "'");
}

void write_bench_jsonl(const std::string& path, const std::vector<BenchRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  for (const BenchRecord& r : records) {
    nlohmann::json j = {{"schema_version", kBenchSchemaVersion},
                        {"cell", r.cell},
                        {"seed", r.seed},
                        {"kind", r.kind},
                        {"algorithm", r.algorithm},
                        {"n", r.n},
                        {"params", r.params},
                        {"true_distance", nullptr},
                        {"estimate", r.estimate},
                        {"ratio", nullptr},
                        {"work_units", r.work_units},
                        {"wall_ms", r.wall_ms}};
    if (r.true_distance) j["true_distance"] = *r.true_distance;
    if (r.ratio) j["ratio"] = *r.ratio;
    out << j.dump() << '\n';
  }
  if (!out) throw Error(ErrorCode::kIo, "failed while writing '" + path + "'");
}

}  // namespace pedit
