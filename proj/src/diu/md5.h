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
// MD5 (RFC 1321): four rounds of sixteen steps over a little-endian block.

#ifndef DIU_MD5_H_
#define DIU_MD5_H_

#include <array>

#include "diu/word_ops.h"

namespace diu::md5 {

inline constexpr int kSteps = 64;
inline constexpr std::size_t kStateWords = 4;
inline constexpr std::size_t kDigestBytes = 16;
inline constexpr ByteOrder kByteOrder = ByteOrder::kLittle;

// The registers A, B, C, D.
struct State {
  Word a = 0;
  Word b = 0;
  Word c = 0;
  Word d = 0;

  friend bool operator==(const State&, const State&) = default;

  std::array<Word, 4> ToArray() const { return {a, b, c, d}; }
  static State FromArray(std::span<const Word> w) {
    return {w[0], w[1], w[2], w[3]};
  }
};

inline constexpr State kInitialState{0x67452301, 0xEFCDAB89, 0x98BADCFE,
                                     0x10325476};

// Frozen floor(2^32 * |sin(i)|), i = 1..64.
extern const std::array<Word, 64> kFrozenTTable;

// Round auxiliary functions F, G, H, I for round = 1..4.
Word aux(int round, Word x, Word y, Word z);

// T[i] for i = 1..64. The table is computed from the sine formula on first
// use and checked against kFrozenTTable; a mismatch aborts the process.
Word t_entry(int i);
const std::array<Word, 64>& t_table();

// Index into the block words consumed at `step` (0..15) of `round` (1..4).
int msg_index(int round, int step);

// Left-rotation amount for `step` (0..15) of `round` (1..4).
int shift_amount(int round, int step);

// One MD5 step: (A, B, C, D) <- (D, B + rotl(A + aux(B, C, D) + x + t, s), B, C).
State step(const State& state, Word x, Word t, int s, int round);

State compress(const State& cv, const Block& block);

}  // namespace diu::md5

#endif  // DIU_MD5_H_
