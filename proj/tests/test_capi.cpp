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

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "pedit/pedit.h"

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pedit_capi_" + name)).string();
}

struct Alpha {
  pedit_alphabet* a = nullptr;
  explicit Alpha(const char* chars) { EXPECT_EQ(pedit_alphabet_new(chars, &a), PEDIT_OK); }
  ~Alpha() { pedit_alphabet_free(a); }
};

pedit_text* text(const pedit_alphabet* a, const std::string& s) {
  pedit_text* t = nullptr;
  EXPECT_EQ(pedit_text_from_bytes(a, s.data(), s.size(), &t), PEDIT_OK) << pedit_last_error();
  return t;
}

TEST(CApi, StatusNamesAndVersion) {
  EXPECT_STREQ(pedit_status_name(PEDIT_OK), "ok");
  EXPECT_NE(std::string(pedit_status_name(PEDIT_ERR_GUARD)), "");
  EXPECT_NE(std::string(pedit_status_name(PEDIT_ERR_MISMATCH)),
            pedit_status_name(PEDIT_ERR_IO));
  EXPECT_NE(std::string(pedit_version()), "");
}

TEST(CApi, AlphabetAndText) {
  Alpha al("ACGT");
  EXPECT_EQ(pedit_alphabet_size(al.a), 4u);
  EXPECT_STREQ(pedit_alphabet_chars(al.a), "ACGT");
  pedit_text* t = text(al.a, "GATTACA");
  EXPECT_EQ(pedit_text_length(t), 7u);
  EXPECT_STREQ(pedit_text_bytes(t), "GATTACA");
  pedit_text* u = nullptr;
  EXPECT_EQ(pedit_text_from_bytes(al.a, "GATXACA", 7, &u), PEDIT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(u, nullptr);
  EXPECT_NE(std::string(pedit_last_error()).find("0x58"), std::string::npos);

  pedit_alphabet* std4 = nullptr;
  ASSERT_EQ(pedit_alphabet_standard(4, &std4), PEDIT_OK);
  EXPECT_STREQ(pedit_alphabet_chars(std4), "ACGT");
  pedit_alphabet_free(std4);
  EXPECT_EQ(pedit_alphabet_standard(0, &std4), PEDIT_ERR_INVALID_ARGUMENT);
  pedit_text_free(t);
}

TEST(CApi, NullArgumentsAreRejected) {
  EXPECT_EQ(pedit_alphabet_new(nullptr, nullptr), PEDIT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pedit_text_length(nullptr), 0u);
  EXPECT_STREQ(pedit_text_bytes(nullptr), "");
  EXPECT_EQ(pedit_script_length(nullptr), 0u);
  uint64_t d = 0;
  EXPECT_EQ(pedit_ed_exact(nullptr, nullptr, 0, &d, nullptr, nullptr),
            PEDIT_ERR_INVALID_ARGUMENT);
  // Freeing NULL is a no-op.
  pedit_text_free(nullptr);
  pedit_script_free(nullptr);
  pedit_profile_free(nullptr);
  pedit_alphabet_free(nullptr);
  pedit_alignment_free(nullptr);
}

TEST(CApi, ExactDistanceAndScript) {
  Alpha al("eiknstg");
  pedit_text* x = text(al.a, "kitten");
  pedit_text* y = text(al.a, "sitting");
  uint64_t d = 0, units = 0;
  pedit_script* s = nullptr;
  ASSERT_EQ(pedit_ed_exact(x, y, 0, &d, &s, &units), PEDIT_OK);
  EXPECT_EQ(d, 3u);
  EXPECT_EQ(pedit_script_length(s), 3u);
  EXPECT_GT(units, 0u);
  pedit_text* z = nullptr;
  ASSERT_EQ(pedit_script_apply(s, x, &z), PEDIT_OK);
  EXPECT_STREQ(pedit_text_bytes(z), "sitting");
  char kind = 0, sym = 0;
  size_t pos = 0;
  ASSERT_EQ(pedit_script_op(s, 0, &kind, &pos, &sym), PEDIT_OK);
  EXPECT_TRUE(kind == 'D' || kind == 'I' || kind == 'S');
  EXPECT_GE(pos, 1u);
  EXPECT_EQ(pedit_script_op(s, 3, &kind, &pos, &sym), PEDIT_ERR_OUT_OF_RANGE);

  int within = 0;
  ASSERT_EQ(pedit_ed_bounded(x, y, 2, &within, &d, nullptr), PEDIT_OK);
  EXPECT_EQ(within, 0);
  ASSERT_EQ(pedit_ed_bounded(x, y, 3, &within, &d, nullptr), PEDIT_OK);
  EXPECT_EQ(within, 1);
  EXPECT_EQ(d, 3u);

  const std::string path = temp_path("script.txt");
  ASSERT_EQ(pedit_script_save(s, path.c_str()), PEDIT_OK);
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 3);

  pedit_text_free(z);
  pedit_script_free(s);
  pedit_text_free(x);
  pedit_text_free(y);
}

TEST(CApi, AlphabetMismatchRefused) {
  Alpha a1("AB"), a2("ABC");
  pedit_text* x = text(a1.a, "ABAB");
  pedit_text* y = text(a2.a, "ABCA");
  uint64_t d = 0;
  EXPECT_EQ(pedit_ed_exact(x, y, 0, &d, nullptr, nullptr), PEDIT_ERR_INVALID_ARGUMENT);
  pedit_text_free(x);
  pedit_text_free(y);
}

TEST(CApi, ParseP) {
  uint64_t q = 0;
  ASSERT_EQ(pedit_parse_p("1/4", &q), PEDIT_OK);
  EXPECT_EQ(q, 4u);
  ASSERT_EQ(pedit_parse_p("0.125", &q), PEDIT_OK);
  EXPECT_EQ(q, 8u);
  ASSERT_EQ(pedit_parse_p("1", &q), PEDIT_OK);
  EXPECT_EQ(q, 1u);
  // Parsing accepts any integer q; the power-of-two check belongs to the callers.
  ASSERT_EQ(pedit_parse_p("1/3", &q), PEDIT_OK);
  EXPECT_EQ(q, 3u);
  EXPECT_EQ(pedit_parse_p("1/0", &q), PEDIT_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pedit_parse_p("abc", &q), PEDIT_ERR_INVALID_ARGUMENT);
}

TEST(CApi, GenerateApproxRoundTrip) {
  pedit_gen_spec g;
  pedit_gen_spec_default(&g);
  g.kind = "edits-from-x";
  g.n = 1536;
  g.k = 16;
  g.seed = 11;
  pedit_text *x = nullptr, *y = nullptr;
  ASSERT_EQ(pedit_generate(&g, &x, &y), PEDIT_OK) << pedit_last_error();
  ASSERT_NE(y, nullptr);
  EXPECT_EQ(pedit_text_length(x), 1536u);

  uint64_t d = 0;
  ASSERT_EQ(pedit_ed_exact(x, y, 0, &d, nullptr, nullptr), PEDIT_OK);
  EXPECT_LE(d, 16u);

  pedit_approx_config c;
  pedit_approx_config_default(&c);
  c.inv_p = 4;
  c.B = 16;
  c.seed = 5;
  pedit_approx_result r{};
  pedit_script* s = nullptr;
  ASSERT_EQ(pedit_approx(x, y, &c, &r, &s), PEDIT_OK) << pedit_last_error();
  EXPECT_GE(r.estimate, d);
  EXPECT_EQ(pedit_script_length(s), r.estimate);
  pedit_text* z = nullptr;
  ASSERT_EQ(pedit_script_apply(s, x, &z), PEDIT_OK);
  EXPECT_EQ(pedit_text_checksum(z), pedit_text_checksum(y));

  // Same seed, same answer.
  pedit_approx_result r2{};
  ASSERT_EQ(pedit_approx(x, y, &c, &r2, nullptr), PEDIT_OK);
  EXPECT_EQ(r2.estimate, r.estimate);
  EXPECT_EQ(r2.work_units, r.work_units);

  c.inv_p = 3;
  EXPECT_EQ(pedit_approx(x, y, &c, &r, nullptr), PEDIT_ERR_INVALID_ARGUMENT);

  pedit_text_free(z);
  pedit_script_free(s);
  pedit_text_free(x);
  pedit_text_free(y);
}

TEST(CApi, GenerateRejectsUnknownKind) {
  pedit_gen_spec g;
  pedit_gen_spec_default(&g);
  g.kind = "zipf";
  pedit_text *x = nullptr, *y = nullptr;
  EXPECT_EQ(pedit_generate(&g, &x, &y), PEDIT_ERR_INVALID_ARGUMENT);
}

TEST(CApi, AuditExactFlags) {
  pedit_gen_spec g;
  pedit_gen_spec_default(&g);
  g.kind = "uniform";
  g.n = 768;
  g.seed = 2;
  pedit_text *x = nullptr, *y = nullptr;
  ASSERT_EQ(pedit_generate(&g, &x, &y), PEDIT_OK);
  EXPECT_EQ(y, nullptr);
  const size_t blocks = pedit_block_count(768, 16);
  EXPECT_EQ(blocks, 8u);
  std::vector<uint8_t> flags(blocks, 7);
  pedit_audit_result r{};
  ASSERT_EQ(pedit_audit_exact(x, 8, 16, 0, &r, flags.data()), PEDIT_OK) << pedit_last_error();
  uint64_t non_unique = 0;
  for (uint8_t f : flags) {
    ASSERT_LE(f, 1u);
    non_unique += f == 0 ? 1 : 0;
  }
  EXPECT_EQ(r.m_value, non_unique * 6 * 16);
  EXPECT_EQ(r.blocks, blocks);

  pedit_audit_result s{};
  ASSERT_EQ(pedit_audit_sampled(x, 8, 16, 200.0, 1, 8.0, &s), PEDIT_OK);
  EXPECT_EQ(s.exact, 0);
  EXPECT_LE(s.samples_drawn, s.sample_size);
  pedit_text_free(x);
}

TEST(CApi, ProfileLifecycle) {
  pedit_gen_spec g;
  pedit_gen_spec_default(&g);
  g.kind = "uniform";
  g.n = 2048;
  g.seed = 3;
  pedit_text *x = nullptr, *y = nullptr;
  ASSERT_EQ(pedit_generate(&g, &x, &y), PEDIT_OK);
  pedit_profile* p = nullptr;
  ASSERT_EQ(pedit_preprocess(x, 4, 1, 8.0, &p), PEDIT_OK) << pedit_last_error();
  EXPECT_EQ(pedit_profile_fallback(p), 0);
  EXPECT_GT(pedit_profile_detected_B(p), 0u);

  const std::string path = temp_path("profile.json");
  ASSERT_EQ(pedit_profile_save(p, path.c_str()), PEDIT_OK);
  pedit_profile* q = nullptr;
  ASSERT_EQ(pedit_profile_load(path.c_str(), &q), PEDIT_OK);
  EXPECT_STREQ(pedit_profile_json(q), pedit_profile_json(p));

  pedit_detect_config c;
  pedit_detect_config_default(&c);
  pedit_detect_result r{};
  ASSERT_EQ(pedit_query(q, x, x, &c, &r, nullptr), PEDIT_OK);
  EXPECT_EQ(r.estimate, 0u);
  EXPECT_EQ(r.exact, 1);

  // A different source string.
  g.seed = 4;
  pedit_text* other = nullptr;
  ASSERT_EQ(pedit_generate(&g, &other, &y), PEDIT_OK);
  EXPECT_EQ(pedit_query(q, other, x, &c, &r, nullptr), PEDIT_ERR_MISMATCH);

  EXPECT_EQ(pedit_profile_load("/nonexistent/p.json", &q), PEDIT_ERR_IO);

  pedit_profile_free(p);
  pedit_profile_free(q);
  pedit_text_free(other);
  pedit_text_free(x);
}

TEST(CApi, DetectEndToEnd) {
  pedit_gen_spec g;
  pedit_gen_spec_default(&g);
  g.kind = "edits-from-x";
  g.n = 2048;
  g.k = 10;
  g.seed = 8;
  pedit_text *x = nullptr, *y = nullptr;
  ASSERT_EQ(pedit_generate(&g, &x, &y), PEDIT_OK);
  pedit_detect_config c;
  pedit_detect_config_default(&c);
  pedit_detect_result r{};
  pedit_script* s = nullptr;
  ASSERT_EQ(pedit_detect(x, y, 4, &c, &r, &s), PEDIT_OK) << pedit_last_error();
  uint64_t d = 0;
  ASSERT_EQ(pedit_ed_exact(x, y, 0, &d, nullptr, nullptr), PEDIT_OK);
  EXPECT_GE(r.estimate, d);
  EXPECT_EQ(pedit_script_length(s), r.estimate);
  EXPECT_EQ(pedit_detect(x, y, 6, &c, &r, nullptr), PEDIT_ERR_INVALID_ARGUMENT);
  pedit_script_free(s);
  pedit_text_free(x);
  pedit_text_free(y);
}

TEST(CApi, GuardRefusesHugeExact) {
  pedit_gen_spec g;
  pedit_gen_spec_default(&g);
  g.kind = "uniform";
  g.n = 40000;
  g.seed = 1;
  pedit_text *x = nullptr, *y = nullptr;
  ASSERT_EQ(pedit_generate(&g, &x, &y), PEDIT_OK);
  uint64_t d = 0;
  EXPECT_EQ(pedit_ed_exact(x, x, 0, &d, nullptr, nullptr), PEDIT_ERR_GUARD);
  EXPECT_NE(std::string(pedit_last_error()), "");
  pedit_audit_result r{};
  pedit_text* big = nullptr;
  g.n = 70000;
  ASSERT_EQ(pedit_generate(&g, &big, &y), PEDIT_OK);
  EXPECT_EQ(pedit_audit_exact(big, 4, 16, 0, &r, nullptr), PEDIT_ERR_GUARD);
  pedit_text_free(big);
  pedit_text_free(x);
}

TEST(CApi, CleanAlignFile) {
  const std::string path = temp_path("matrix.txt");
  {
    std::ofstream out(path);
    out << "100\n010\n001\n";
  }
  pedit_clean_result r{};
  pedit_alignment* a = nullptr;
  ASSERT_EQ(pedit_clean_align_file(path.c_str(), 1, 100, 1, &r, &a), PEDIT_OK)
      << pedit_last_error();
  EXPECT_EQ(r.u_len, 3u);
  EXPECT_EQ(r.v_len, 3u);
  EXPECT_EQ(r.total, 0u);
  EXPECT_EQ(r.has_optimum, 1);
  EXPECT_EQ(r.optimum_total, 0u);
  ASSERT_EQ(pedit_alignment_length(a), 3u);
  size_t i = 0, j = 0;
  ASSERT_EQ(pedit_alignment_pair(a, 2, &i, &j), PEDIT_OK);
  EXPECT_EQ(i, 3u);
  EXPECT_EQ(j, 3u);
  pedit_alignment_free(a);
  EXPECT_EQ(pedit_clean_align_file("/nonexistent/m.txt", 1, 100, 0, &r, &a), PEDIT_ERR_IO);
}

TEST(CApi, TextFilesAndLinesFormat) {
  const std::string path = temp_path("lines.txt");
  {
    std::ofstream out(path);
    out << "ACGT\nTTGA\n";
  }
  size_t count = 0;
  ASSERT_EQ(pedit_file_string_count(path.c_str(), PEDIT_FORMAT_LINES, &count), PEDIT_OK);
  EXPECT_EQ(count, 2u);
  const char* paths[] = {path.c_str()};
  pedit_alphabet* a = nullptr;
  ASSERT_EQ(pedit_alphabet_detect_files(paths, 1, PEDIT_FORMAT_LINES, &a), PEDIT_OK);
  EXPECT_STREQ(pedit_alphabet_chars(a), "ACGT");
  pedit_text* t = nullptr;
  ASSERT_EQ(pedit_text_load(a, path.c_str(), PEDIT_FORMAT_LINES, 1, &t), PEDIT_OK);
  EXPECT_STREQ(pedit_text_bytes(t), "TTGA");
  pedit_text_free(t);
  EXPECT_EQ(pedit_text_load(a, path.c_str(), PEDIT_FORMAT_LINES, 2, &t), PEDIT_ERR_OUT_OF_RANGE);
  EXPECT_EQ(pedit_text_load(a, "/nonexistent/x.txt", PEDIT_FORMAT_RAW, 0, &t), PEDIT_ERR_IO);
  pedit_alphabet_free(a);
}

}  // namespace
