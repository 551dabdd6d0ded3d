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

#include "pedit/param_detect.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "pedit/edit_distance.hpp"
#include "pedit/error.hpp"
#include "pedit/pseudorandom.hpp"

namespace pedit {

namespace {

constexpr std::uint64_t kApproxStream = 0xA99;
constexpr std::uint64_t kLevelStream = 0x1E7E1;

double single_shot_threshold(double n, double alpha, double B) {
  return 2.0 * std::pow(n, 2.0 / 3.0) * std::pow(alpha, 2.0 / 3.0) *
         std::cbrt(B + alpha * alpha);
}

double preprocess_threshold(double n, double alpha, double B) {
  return 2.0 * std::sqrt(n) * std::sqrt(B + alpha * alpha);
}

LevelAudit audit_of(const SampledMTest& test, std::size_t B, double threshold) {
  const AuditReport rep = test.report();
  LevelAudit a;
  a.B = B;
  a.threshold = threshold;
  a.finished = test.finished();
  a.accepted = test.finished() && test.verdict();
  a.samples_drawn = rep.samples_drawn;
  a.failures = rep.failures;
  a.units = test.units();
  return a;
}

// Exact answer by the quadratic DP, used when no level is accepted.
void exact_fallback(const Text& x, const Text& y, DetectResult& out) {
  WorkMeter meter;
  DistanceWithScript d = ed_exact_script(x, y, &meter);
  out.estimate = d.distance;
  out.script = std::move(d.script);
  out.exact = true;
  out.fallback = true;
  out.work_units += meter.units();
  out.warnings.push_back("no block size passed the sampled test; x is not usably "
                         "pseudorandom, answered with the exact DP");
}

void take_approx(const Text& x, const Text& y, const PseudoParams& params, const Rng& rng,
                 const ApproxOptions& options, DetectResult& out) {
  ApproxResult a = approx_ed(x, y, params, rng.split(kApproxStream), options);
  out.estimate = a.estimate;
  out.script = std::move(a.script);
  out.exact = false;
  out.approx_units = a.work_units;
  for (auto& w : a.warnings) out.warnings.push_back(std::move(w));
}

}  // namespace

void check_alpha(std::uint64_t alpha) {
  if (alpha < 2 || !std::has_single_bit(alpha)) {
    throw Error(ErrorCode::kInvalidArgument,
                "alpha must be a power of two >= 2, got " + std::to_string(alpha));
  }
}

DetectResult detect_single_shot(const Text& x, const Text& y, std::uint64_t alpha,
                                const Rng& rng, const DetectOptions& options) {
  check_alpha(alpha);
  DetectResult out;
  out.q_used = alpha / 2;
  const double n = static_cast<double>(std::max<std::size_t>({x.size(), y.size(), 1}));
  const double a = static_cast<double>(alpha);
  const std::size_t top = x.size() / 6;

  LowDistanceRun ld(x, y);
  std::unique_ptr<SampledMTest> test;
  std::size_t level = 0;
  std::size_t B = alpha;
  double thr = 0;
  auto open_level = [&]() -> bool {
    if (B > top) return false;
    thr = single_shot_threshold(n, a, static_cast<double>(B));
    test = std::make_unique<SampledMTest>(x, PseudoParams::make(out.q_used, B), thr,
                                          rng.split(kLevelStream + level), options.sample_coeff);
    return true;
  };

  bool searching = open_level();
  bool accepted = false;
  bool ld_done = false;
  while (true) {
    if (ld.advance(ld.units() + options.slice)) {
      ld_done = true;
      break;
    }
    if (!searching) break;
    if (test->advance(test->units() + options.slice)) {
      out.levels.push_back(audit_of(*test, B, thr));
      out.search_units += test->units();
      if (test->verdict()) {
        accepted = true;
        break;
      }
      ++level;
      B *= 2;
      searching = open_level();
    }
  }
  if (ld_done && searching && !accepted) {
    out.levels.push_back(audit_of(*test, B, thr));
    out.search_units += test->units();
  }

  if (!ld_done && accepted) {
    out.detected_B = B;
    out.threshold = thr;
    const double budget = options.budget_coeff * std::pow(n, 4.0 / 3.0) *
                          std::pow(static_cast<double>(B) + a * a, 2.0 / 3.0) /
                          std::pow(a, 2.0 / 3.0);
    ld_done = ld.advance(std::max<std::uint64_t>(ld.units(),
                                                 static_cast<std::uint64_t>(budget)));
  }
  out.low_distance_units = ld.units();

  if (ld_done) {
    out.estimate = ld.distance();
    out.script = ld.script();
    out.exact = true;
  } else if (accepted) {
    take_approx(x, y, PseudoParams::make(out.q_used, B), rng, options.approx, out);
  } else {
    exact_fallback(x, y, out);
  }
  out.work_units += out.low_distance_units + out.search_units + out.approx_units;
  return out;
}

SourceProfile preprocess_source(const Text& x, std::uint64_t alpha, const Rng& rng,
                                double sample_coeff) {
  check_alpha(alpha);
  SourceProfile prof;
  prof.alpha = alpha;
  prof.q_used = alpha / 2;
  prof.seed = rng.seed();
  prof.n = x.size();
  prof.checksum = x.checksum();
  prof.sample_coeff = sample_coeff;
  const double n = static_cast<double>(std::max<std::size_t>(x.size(), 1));
  const double a = static_cast<double>(alpha);

  std::size_t level = 0;
  for (std::size_t B = alpha; B <= x.size() / 6; B *= 2, ++level) {
    const double thr = preprocess_threshold(n, a, static_cast<double>(B));
    SampledMTest test(x, PseudoParams::make(prof.q_used, B), thr, rng.split(kLevelStream + level),
                      sample_coeff);
    test.advance(std::numeric_limits<std::uint64_t>::max());
    prof.levels.push_back(audit_of(test, B, thr));
    if (test.verdict()) {
      prof.detected_B = B;
      prof.threshold = thr;
      return prof;
    }
  }
  prof.fallback = true;
  return prof;
}

DetectResult query_source(const SourceProfile& profile, const Text& x, const Text& y,
                          const Rng& rng, const DetectOptions& options) {
  if (x.size() != profile.n || x.checksum() != profile.checksum) {
    throw Error(ErrorCode::kMismatch,
                "profile was built for a different source string (length " +
                    std::to_string(profile.n) + ", got " + std::to_string(x.size()) + ")");
  }
  DetectResult out;
  out.q_used = profile.q_used;
  out.detected_B = profile.detected_B;
  out.threshold = profile.threshold;
  out.levels = profile.levels;
  if (profile.fallback) {
    exact_fallback(x, y, out);
    return out;
  }
  const double n = static_cast<double>(std::max<std::size_t>({x.size(), y.size(), 1}));
  const auto budget = static_cast<std::uint64_t>(options.budget_coeff * n *
                                                 static_cast<double>(profile.detected_B));
  LowDistanceRun ld(x, y);
  const bool done = ld.advance(budget);
  out.low_distance_units = ld.units();
  if (done) {
    out.estimate = ld.distance();
    out.script = ld.script();
    out.exact = true;
  } else {
    take_approx(x, y, PseudoParams::make(profile.q_used, profile.detected_B), rng,
                options.approx, out);
  }
  out.work_units = out.low_distance_units + out.approx_units;
  return out;
}

std::string SourceProfile::to_json() const {
  nlohmann::json levels_json = nlohmann::json::array();
  for (const LevelAudit& l : levels) {
    levels_json.push_back({{"B", l.B},
                           {"threshold", l.threshold},
                           {"finished", l.finished},
                           {"accepted", l.accepted},
                           {"samples_drawn", l.samples_drawn},
                           {"failures", l.failures},
                           {"units", l.units}});
  }
  const nlohmann::json j = {{"schema_version", kSchemaVersion},
                            {"alpha", alpha},
                            {"detected_B", detected_B},
                            {"p_used", "1/" + std::to_string(q_used)},
                            {"threshold", threshold},
                            {"seed", seed},
                            {"n", n},
                            {"checksum", checksum},
                            {"fallback", fallback},
                            {"sample_coeff", sample_coeff},
                            {"levels", levels_json}};
  return j.dump(2);
}

SourceProfile SourceProfile::from_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw Error(ErrorCode::kInvalidArgument, "unsupported profile schema_version");
    }
    SourceProfile p;
    p.alpha = j.at("alpha").get<std::uint64_t>();
    check_alpha(p.alpha);
    p.detected_B = j.at("detected_B").get<std::size_t>();
    p.q_used = parse_inverse_p(j.at("p_used").get<std::string>());
    p.threshold = j.at("threshold").get<double>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.n = j.at("n").get<std::size_t>();
    p.checksum = j.at("checksum").get<std::uint64_t>();
    p.fallback = j.at("fallback").get<bool>();
    p.sample_coeff = j.value("sample_coeff", 8.0);
    for (const auto& l : j.value("levels", nlohmann::json::array())) {
      LevelAudit a;
      a.B = l.at("B").get<std::size_t>();
      a.threshold = l.at("threshold").get<double>();
      a.finished = l.at("finished").get<bool>();
      a.accepted = l.at("accepted").get<bool>();
      a.samples_drawn = l.at("samples_drawn").get<std::uint64_t>();
      a.failures = l.at("failures").get<std::uint64_t>();
      a.units = l.at("units").get<std::uint64_t>();
      p.levels.push_back(a);
    }
    if (!p.fallback && (p.detected_B < p.alpha || p.q_used * 2 != p.alpha)) {
      throw Error(ErrorCode::kInvalidArgument, "profile fields are inconsistent");
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("malformed profile: ") + e.what());
  }
}

void SourceProfile::save(const std::string& path) const { write_string(path, to_json()); }

SourceProfile SourceProfile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open profile '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

}  // namespace pedit
