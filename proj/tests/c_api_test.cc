// Copyright 2026 The DIU Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Exercises libdiu through its exported C symbols only.

#include "diu/diu.h"

#include <cstring>
#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace {

std::string Hex(const uint8_t* p, size_t n) {
  static const char* d = "0123456789abcdef";
  std::string s;
  for (size_t i = 0; i < n; ++i) {
    s += d[p[i] >> 4];
    s += d[p[i] & 15];
  }
  return s;
}

TEST(CApiTest, AlgorithmNames) {
  diu_algorithm alg;
  ASSERT_EQ(diu_algorithm_from_name("sha192", &alg), DIU_OK);
  EXPECT_EQ(alg, DIU_ALG_SHA192);
  EXPECT_STREQ(diu_algorithm_name(DIU_ALG_SHA1), "sha1");
  EXPECT_EQ(diu_algorithm_from_name("sha256", &alg), DIU_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(diu_last_error()).find("sha256"), std::string::npos);
  EXPECT_EQ(diu_digest_size(DIU_ALG_MD5), 16u);
  EXPECT_EQ(diu_digest_size(DIU_ALG_SHA1), 20u);
  EXPECT_EQ(diu_digest_size(DIU_ALG_SHA192), 24u);
}

TEST(CApiTest, StreamingHash) {
  diu_hash* h = nullptr;
  ASSERT_EQ(diu_hash_new(DIU_ALG_MD5, 0, &h), DIU_OK);
  EXPECT_EQ(diu_hash_update(h, reinterpret_cast<const uint8_t*>("a"), 1), DIU_OK);
  EXPECT_EQ(diu_hash_update(h, reinterpret_cast<const uint8_t*>("bc"), 2), DIU_OK);
  EXPECT_EQ(diu_hash_update(h, nullptr, 0), DIU_OK);
  uint8_t out[DIU_MAX_DIGEST_SIZE];
  size_t len = 0;
  ASSERT_EQ(diu_hash_final(h, out, sizeof(out), &len), DIU_OK);
  EXPECT_EQ(Hex(out, len), "900150983cd24fb0d6963f7d28e17f72");
  EXPECT_EQ(diu_hash_update(h, out, 1), DIU_ERR_USE_AFTER_FINALIZE);
  EXPECT_EQ(diu_hash_final(h, out, sizeof(out), &len),
            DIU_ERR_USE_AFTER_FINALIZE);
  diu_hash_free(h);
}

TEST(CApiTest, SmallBufferReportsSize) {
  diu_hash* h = nullptr;
  ASSERT_EQ(diu_hash_new(DIU_ALG_SHA192, 1, &h), DIU_OK);
  uint8_t small[8];
  size_t len = 0;
  EXPECT_EQ(diu_hash_final(h, small, sizeof(small), &len),
            DIU_ERR_BUFFER_TOO_SMALL);
  EXPECT_EQ(len, 24u);
  uint8_t out[24];
  EXPECT_EQ(diu_hash_final(h, out, sizeof(out), &len), DIU_OK);
  EXPECT_EQ(Hex(out, len), "3decc0bf73d424c70118692b42e60e903d9d344e934e598f");
  diu_hash_free(h);
}

TEST(CApiTest, UnifiedSha1Rejected) {
  diu_hash* h = nullptr;
  EXPECT_EQ(diu_hash_new(DIU_ALG_SHA1, 1, &h), DIU_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(h, nullptr);
}

TEST(CApiTest, OneShotDigestMatchesAcrossPaths) {
  std::vector<uint8_t> msg(777);
  for (size_t i = 0; i < msg.size(); ++i) msg[i] = static_cast<uint8_t>(i * 13);
  for (diu_algorithm alg : {DIU_ALG_MD5, DIU_ALG_SHA192}) {
    uint8_t a[24], b[24];
    size_t la = 0, lb = 0;
    ASSERT_EQ(diu_digest(alg, 0, msg.data(), msg.size(), a, 24, &la), DIU_OK);
    ASSERT_EQ(diu_digest(alg, 1, msg.data(), msg.size(), b, 24, &lb), DIU_OK);
    EXPECT_EQ(Hex(a, la), Hex(b, lb));
  }
}

TEST(CApiTest, CoreLifecycle) {
  diu_core* core = nullptr;
  ASSERT_EQ(diu_core_new(DIU_MODE_MD5, &core), DIU_OK);
  const uint32_t six[6] = {};
  uint8_t block[64] = {0x80};
  EXPECT_EQ(diu_core_load_block(core, six, 6, block), DIU_ERR_ARITY_MISMATCH);
  const uint32_t iv[4] = {0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476};
  ASSERT_EQ(diu_core_load_block(core, iv, 4, block), DIU_OK);
  uint32_t cv[6];
  size_t words = 0;
  ASSERT_EQ(diu_core_run_block(core, cv, 6, &words), DIU_OK);
  ASSERT_EQ(words, 4u);
  EXPECT_EQ(cv[0], 0xd98c1dd4u);  // d41d8cd9 read little-endian
  diu_trace_entry e;
  EXPECT_EQ(diu_core_step(core, &e), DIU_ERR_BLOCK_EXHAUSTED);
  diu_core_free(core);
}

TEST(CApiTest, TraceEmptySha192) {
  std::vector<diu_trace_entry> entries(80);
  size_t count = 0;
  ASSERT_EQ(diu_trace(DIU_MODE_SHA192, nullptr, 0, 0, entries.data(),
                      entries.size(), &count),
            DIU_OK);
  ASSERT_EQ(count, 80u);
  const uint32_t iv[6] = {0x67452301, 0xEFCDAB89, 0x98BADCFE,
                          0x10325476, 0xC3D2E1F0, 0xF9B2D834};
  uint8_t digest[24];
  size_t len;
  ASSERT_EQ(diu_digest(DIU_ALG_SHA192, 0, nullptr, 0, digest, 24, &len), DIU_OK);
  for (int i = 0; i < 6; ++i) {
    const uint32_t word = uint32_t{digest[4 * i]} << 24 |
                          uint32_t{digest[4 * i + 1]} << 16 |
                          uint32_t{digest[4 * i + 2]} << 8 | digest[4 * i + 3];
    EXPECT_EQ(entries[79].regs[i] + iv[i], word) << i;
  }
  EXPECT_EQ(diu_trace(DIU_MODE_SHA192, nullptr, 0, 1, entries.data(),
                      entries.size(), &count),
            DIU_ERR_INVALID_ARGUMENT);
}

TEST(CApiTest, ResourceReport) {
  diu_resource_row rows[3];
  int saves = 0;
  ASSERT_EQ(diu_resource_report(rows, &saves), DIU_OK);
  EXPECT_EQ(saves, 1);
  EXPECT_EQ(rows[0].modular_adders, 4u);
  EXPECT_EQ(rows[1].modular_adders, 6u);
  EXPECT_EQ(rows[2].modular_adders, 6u);
  EXPECT_LT(rows[2].total, rows[0].total + rows[1].total);
}

TEST(CApiTest, VectorsAndSelftest) {
  diu_vectors* v = nullptr;
  ASSERT_EQ(diu_vectors_load_default(&v), DIU_OK);
  EXPECT_GE(diu_vectors_count_for(v, DIU_ALG_SHA192), 8u);
  diu_selftest* r = nullptr;
  ASSERT_EQ(diu_selftest_run(v, &r), DIU_OK);
  EXPECT_EQ(diu_selftest_failed(r), 0u);
  EXPECT_EQ(diu_selftest_passed(r), diu_vectors_count(v));
  EXPECT_EQ(diu_selftest_failure(r, 0), nullptr);
  diu_selftest_free(r);
  diu_vectors_free(v);

  const char bad[] = "md5,61,00000000000000000000000000000000\n";
  ASSERT_EQ(diu_vectors_parse(bad, std::strlen(bad), &v), DIU_OK);
  ASSERT_EQ(diu_selftest_run(v, &r), DIU_OK);
  EXPECT_EQ(diu_selftest_failed(r), 1u);
  EXPECT_NE(std::string(diu_selftest_failure(r, 0)).find("line 1"),
            std::string::npos);
  diu_selftest_free(r);
  diu_vectors_free(v);

  EXPECT_EQ(diu_vectors_load_file("/nonexistent.txt", &v), DIU_ERR_IO);
  const char short_digest[] = "sha192,,3decc0bf73d424c70118692b42e60e903d9d344e934e59\n";
  EXPECT_EQ(diu_vectors_parse(short_digest, std::strlen(short_digest), &v),
            DIU_ERR_DIGEST_LENGTH_MISMATCH);
}

}  // namespace
