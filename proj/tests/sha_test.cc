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

#include "diu/sha.h"

#include <random>
#include <string>

#include "diu/digest.h"
#include "diu/vectors.h"
#include "gtest/gtest.h"

namespace diu {
namespace {

Bytes Str(const std::string& s) { return Bytes(s.begin(), s.end()); }

std::string Alphabet(std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s.push_back(static_cast<char>('a' + i % 26));
  return s;
}

std::string Hex(Algorithm alg, const std::string& s) {
  return ToHex(Digest(alg, Str(s)));
}

TEST(ShaFTest, Examples) {
  const Word x = 0x0F0F1234, v = 0x89ABCDEF, z = 0x13572468;
  EXPECT_EQ(sha::f(25, x, x, 0), 0u);
  EXPECT_EQ(sha::f(50, v, v, z), v);
  EXPECT_EQ(sha::f(5, 0xFFFFFFFF, v, z), v);
  EXPECT_EQ(sha::f(70, x, v, z), x ^ v ^ z);
}

TEST(ShaKTest, Bands) {
  EXPECT_EQ(sha::k(0), 0x5A827999u);
  EXPECT_EQ(sha::k(19), 0x5A827999u);
  EXPECT_EQ(sha::k(20), 0x6ED9EBA1u);
  EXPECT_EQ(sha::k(59), 0x8F1BBCDCu);
  EXPECT_EQ(sha::k(60), 0xCA62C1D6u);
  EXPECT_EQ(sha::k(79), 0xCA62C1D6u);
}

TEST(ScheduleTest, ZeroBlock) {
  const auto w = sha::expand_schedule(BlockWords{});
  for (Word x : w) EXPECT_EQ(x, 0u);
}

TEST(ScheduleTest, SingleTermRecurrence) {
  BlockWords b{};
  b[0] = 1;
  EXPECT_EQ(sha::expand_schedule(b)[16], 2u);
}

TEST(ScheduleTest, FrozenRandomBlock) {
  // Seeded block and w[79] from tests/oracles/oracle.py.
  const BlockWords b = {0xEA125C50, 0x361424B1, 0x32CCD896, 0x70B50ECB,
                        0x7B21822C, 0x02AE6661, 0xD1E8E1BA, 0xD2DB9299,
                        0x0A514E83, 0x07A615DE, 0x9C2B9DE1, 0x31B066CE,
                        0x86719D9F, 0xD3E9B4AD, 0x6C2AAFF5, 0xE33FCCA6};
  EXPECT_EQ(sha::expand_schedule(b)[79], 0xE5055C36u);
}

TEST(ScheduleTest, RecurrenceMatchesBruteForce) {
  std::mt19937 rng(21);
  for (int i = 0; i < 1000; ++i) {
    BlockWords b;
    for (auto& x : b) x = rng();
    const auto w = sha::expand_schedule(b);
    std::vector<Word> ref(b.begin(), b.end());
    for (int t = 16; t < 80; ++t) {
      const Word x = ref[t - 3] ^ ref[t - 8] ^ ref[t - 14] ^ ref[t - 16];
      ref.push_back((x << 1) | (x >> 31));
    }
    ASSERT_TRUE(std::equal(ref.begin(), ref.end(), w.begin()));
  }
}

TEST(Sha1Test, KnownAnswers) {
  // hashlib.sha1 outputs.
  EXPECT_EQ(Hex(Algorithm::kSha1, ""),
            "da39a3ee5e6b4b0d3255bfef95601890afd80709");
  EXPECT_EQ(Hex(Algorithm::kSha1, "abc"),
            "a9993e364706816aba3e25717850c26c9cd0d89d");
  EXPECT_EQ(Hex(Algorithm::kSha1,
                "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq"),
            "84983e441c3bd26ebaae4aa1f95129e5e54670f1");
}

TEST(Sha1Test, CompressDeterministic) {
  Block b{};
  b[0] = 0x80;
  EXPECT_EQ(sha::sha1_compress(sha::kSha1InitialState, b),
            sha::sha1_compress(sha::kSha1InitialState, b));
}

TEST(Sha192StepTest, ZeroRegistersStayZero) {
  EXPECT_EQ(sha::sha192_step({}, 0, 0, 25), sha::Sha192Regs{});
}

TEST(Sha192StepTest, FirstStepFromInitialState) {
  // Straight-line transcription in tests/oracles/oracle.py.
  const auto next = sha::sha192_step(
      sha::Sha192Regs::FromArray(sha::kSha192InitialState), 0, 0x5A827999, 0);
  const sha::Sha192Regs want{0x00AC93E8, 0x9180B3A2, 0x7BF36AE2,
                             0x98BADCFE, 0x10325476, 0x9FB498B3};
  EXPECT_EQ(next, want);
}

TEST(Sha192StepTest, DataflowAndAccumulatorIdentity) {
  std::mt19937 rng(22);
  for (int i = 0; i < 1000; ++i) {
    const sha::Sha192Regs r{Word(rng()), Word(rng()), Word(rng()), Word(rng()), Word(rng()), Word(rng())};
    const Word w = rng();
    const int t = static_cast<int>(rng() % 80);
    const auto n = sha::sha192_step(r, w, sha::k(t), t);
    const Word temp1 = rotl(r.a, 5) + sha::f(t, r.b, r.c, r.d) + r.e + w +
                       sha::k(t);
    EXPECT_EQ(n.f, temp1);
    EXPECT_EQ(n.a - n.f, r.a + r.f);
    EXPECT_EQ(n.b, rotl(r.a, 15));
    EXPECT_EQ(n.c, rotl(r.b, 30));
    EXPECT_EQ(n.d, r.c);
    EXPECT_EQ(n.e, r.d);
  }
}

TEST(Sha192Test, KnownAnswers) {
  // tests/oracles/oracle.py sha192_oracle outputs.
  EXPECT_EQ(Hex(Algorithm::kSha192, ""),
            "3decc0bf73d424c70118692b42e60e903d9d344e934e598f");
  EXPECT_EQ(Hex(Algorithm::kSha192, "abc"),
            "499d0b3e779ef9645a03fef910492e571ccc0f0f9a95371e");
}

TEST(Sha192Test, NotAFixedPointOnEmptyMessage) {
  const auto blocks = pad_message({}, 0, LengthEncoding::kBigEndian64);
  EXPECT_NE(sha::sha192_compress(sha::kSha192InitialState, blocks[0]),
            sha::kSha192InitialState);
}

TEST(Sha192Test, DigestLengthIsAlways24) {
  for (std::size_t n : {0u, 1u, 63u, 64u, 65u, 500u}) {
    EXPECT_EQ(Digest(Algorithm::kSha192, Str(Alphabet(n))).size(), 24u);
  }
}

TEST(ShaStreamingTest, RandomChunkingMatchesOneShot) {
  std::mt19937 rng(23);
  for (Algorithm alg : {Algorithm::kSha1, Algorithm::kSha192}) {
    for (int i = 0; i < 300; ++i) {
      Bytes m(rng() % 400);
      for (auto& b : m) b = static_cast<Byte>(rng());
      HashContext ctx(alg);
      std::size_t pos = 0;
      while (pos < m.size()) {
        const std::size_t n = std::min<std::size_t>(m.size() - pos, rng() % 130);
        ctx.update(std::span<const Byte>(m).subspan(pos, n));
        pos += n;
      }
      ASSERT_EQ(ctx.finalize(), Digest(alg, m));
    }
  }
}

TEST(ShaFamilyTest, SharedRoundTables) {
  // TEMP1 of a SHA-192 step is the SHA-1 TEMP for every t.
  std::mt19937 rng(24);
  for (int t = 0; t < 80; ++t) {
    const Word a = rng(), b = rng(), c = rng(), d = rng(), e = rng(), w = rng();
    const auto n = sha::sha192_step({a, b, c, d, e, 0}, w, sha::k(t), t);
    const Word sha1_temp = rotl(a, 5) + sha::f(t, b, c, d) + e + w + sha::k(t);
    EXPECT_EQ(n.f, sha1_temp) << t;
  }
}

}  // namespace
}  // namespace diu
