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
// SHA-1 and SHA-192. Both share the f_t logic functions, the K_t constants
// and the 80-word message schedule. SHA-192 widens the chaining state to six
// words and adds a second accumulator (TEMP2 = TEMP1 + A + F) plus an S15
// rotation feeding B.

#ifndef DIU_SHA_H_
#define DIU_SHA_H_

#include <array>

#include "diu/word_ops.h"

namespace diu::sha {

inline constexpr int kSteps = 80;
inline constexpr ByteOrder kByteOrder = ByteOrder::kBig;

using Schedule = std::array<Word, kSteps>;
using Sha1State = std::array<Word, 5>;
using Sha192State = std::array<Word, 6>;

inline constexpr Sha1State kSha1InitialState = {
    0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0};
inline constexpr Sha192State kSha192InitialState = {
    0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0, 0xF9B2D834};

inline constexpr std::size_t kSha1DigestBytes = 20;
inline constexpr std::size_t kSha192DigestBytes = 24;

// Ch for t < 20, parity for 20..39 and 60..79, majority for 40..59.
Word f(int t, Word b, Word c, Word d);
// K_t, one constant per 20-step band.
Word k(int t);

Schedule expand_schedule(const BlockWords& block_words);

Sha1State sha1_compress(const Sha1State& cv, const Block& block);

// Working variables of a SHA-192 step.
struct Sha192Regs {
  Word a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

  friend bool operator==(const Sha192Regs&, const Sha192Regs&) = default;

  Sha192State ToArray() const { return {a, b, c, d, e, f}; }
  static Sha192Regs FromArray(std::span<const Word> w) {
    return {w[0], w[1], w[2], w[3], w[4], w[5]};
  }
};

// All right-hand sides read the incoming registers:
//   TEMP1 = S5(A) + f_t(B, C, D) + E + w + k
//   TEMP2 = TEMP1 + A + F
//   (A, B, C, D, E, F) <- (TEMP2, S15(A), S30(B), C, D, TEMP1)
Sha192Regs sha192_step(const Sha192Regs& regs, Word w, Word k, int t);

Sha192State sha192_compress(const Sha192State& cv, const Block& block);

}  // namespace diu::sha

#endif  // DIU_SHA_H_
