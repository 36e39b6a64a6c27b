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

#include "diu/md5.h"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace diu::md5 {

const std::array<Word, 64> kFrozenTTable = {
    0xD76AA478, 0xE8C7B756, 0x242070DB, 0xC1BDCEEE,
    0xF57C0FAF, 0x4787C62A, 0xA8304613, 0xFD469501,
    0x698098D8, 0x8B44F7AF, 0xFFFF5BB1, 0x895CD7BE,
    0x6B901122, 0xFD987193, 0xA679438E, 0x49B40821,
    0xF61E2562, 0xC040B340, 0x265E5A51, 0xE9B6C7AA,
    0xD62F105D, 0x02441453, 0xD8A1E681, 0xE7D3FBC8,
    0x21E1CDE6, 0xC33707D6, 0xF4D50D87, 0x455A14ED,
    0xA9E3E905, 0xFCEFA3F8, 0x676F02D9, 0x8D2A4C8A,
    0xFFFA3942, 0x8771F681, 0x6D9D6122, 0xFDE5380C,
    0xA4BEEA44, 0x4BDECFA9, 0xF6BB4B60, 0xBEBFBC70,
    0x289B7EC6, 0xEAA127FA, 0xD4EF3085, 0x04881D05,
    0xD9D4D039, 0xE6DB99E5, 0x1FA27CF8, 0xC4AC5665,
    0xF4292244, 0x432AFF97, 0xAB9423A7, 0xFC93A039,
    0x655B59C3, 0x8F0CCC92, 0xFFEFF47D, 0x85845DD1,
    0x6FA87E4F, 0xFE2CE6E0, 0xA3014314, 0x4E0811A1,
    0xF7537E82, 0xBD3AF235, 0x2AD7D2BB, 0xEB86D391,
};

namespace {

constexpr int kShifts[4][4] = {
    {7, 12, 17, 22},
    {5, 9, 14, 20},
    {4, 11, 16, 23},
    {6, 10, 15, 21},
};

std::array<Word, 64> ComputeTTable() {
  std::array<Word, 64> table;
  for (int i = 1; i <= 64; ++i) {
    const long double v =
        std::floor(4294967296.0L * std::fabs(std::sin(static_cast<long double>(i))));
    table[i - 1] = static_cast<Word>(v);
  }
  if (table != kFrozenTTable) {
    std::fprintf(stderr, "diu: MD5 sine table disagrees with frozen constants\n");
    std::abort();
  }
  return table;
}

}  // namespace

const std::array<Word, 64>& t_table() {
  static const std::array<Word, 64> table = ComputeTTable();
  return table;
}

Word t_entry(int i) {
  assert(i >= 1 && i <= 64);
  return t_table()[i - 1];
}

Word aux(int round, Word x, Word y, Word z) {
  switch (round) {
    case 1: return (x & y) | (~x & z);
    case 2: return (x & z) | (y & ~z);
    case 3: return x ^ y ^ z;
    case 4: return y ^ (x | ~z);
  }
  assert(false && "MD5 round out of range");
  return 0;
}

int msg_index(int round, int step) {
  assert(step >= 0 && step < 16);
  switch (round) {
    case 1: return step;
    case 2: return (1 + 5 * step) % 16;
    case 3: return (5 + 3 * step) % 16;
    case 4: return (7 * step) % 16;
  }
  assert(false && "MD5 round out of range");
  return 0;
}

int shift_amount(int round, int step) {
  assert(round >= 1 && round <= 4 && step >= 0 && step < 16);
  return kShifts[round - 1][step % 4];
}

State step(const State& state, Word x, Word t, int s, int round) {
  const Word f = aux(round, state.b, state.c, state.d);
  const Word b = state.b + rotl(state.a + f + x + t, s);
  return {state.d, b, state.b, state.c};
}

State compress(const State& cv, const Block& block) {
  const BlockWords x = words_from_block(block, kByteOrder);
  const auto& t = t_table();
  State s = cv;
  for (int i = 0; i < kSteps; ++i) {
    const int round = i / 16 + 1;
    const int j = i % 16;
    s = step(s, x[msg_index(round, j)], t[i], shift_amount(round, j), round);
  }
  return {cv.a + s.a, cv.b + s.b, cv.c + s.c, cv.d + s.d};
}

}  // namespace diu::md5
