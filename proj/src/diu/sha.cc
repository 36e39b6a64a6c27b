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

#include <cassert>

namespace diu::sha {

Word f(int t, Word b, Word c, Word d) {
  assert(t >= 0 && t < kSteps);
  if (t < 20) return (b & c) | (~b & d);
  if (t < 40) return b ^ c ^ d;
  if (t < 60) return (b & c) | (b & d) | (c & d);
  return b ^ c ^ d;
}

Word k(int t) {
  assert(t >= 0 && t < kSteps);
  static constexpr Word kBands[4] = {0x5A827999, 0x6ED9EBA1, 0x8F1BBCDC,
                                     0xCA62C1D6};
  return kBands[t / 20];
}

Schedule expand_schedule(const BlockWords& block_words) {
  Schedule w;
  for (int t = 0; t < 16; ++t) w[t] = block_words[t];
  for (int t = 16; t < kSteps; ++t) {
    w[t] = rotl(w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16], 1);
  }
  return w;
}

Sha1State sha1_compress(const Sha1State& cv, const Block& block) {
  const Schedule w = expand_schedule(words_from_block(block, kByteOrder));
  Word a = cv[0], b = cv[1], c = cv[2], d = cv[3], e = cv[4];
  for (int t = 0; t < kSteps; ++t) {
    const Word temp = rotl(a, 5) + f(t, b, c, d) + e + w[t] + k(t);
    e = d;
    d = c;
    c = rotl(b, 30);
    b = a;
    a = temp;
  }
  return {cv[0] + a, cv[1] + b, cv[2] + c, cv[3] + d, cv[4] + e};
}

Sha192Regs sha192_step(const Sha192Regs& r, Word w, Word k, int t) {
  const Word temp1 = rotl(r.a, 5) + f(t, r.b, r.c, r.d) + r.e + w + k;
  const Word temp2 = temp1 + r.a + r.f;
  return {temp2, rotl(r.a, 15), rotl(r.b, 30), r.c, r.d, temp1};
}

Sha192State sha192_compress(const Sha192State& cv, const Block& block) {
  const Schedule w = expand_schedule(words_from_block(block, kByteOrder));
  Sha192Regs r = Sha192Regs::FromArray(cv);
  for (int t = 0; t < kSteps; ++t) r = sha192_step(r, w[t], k(t), t);
  const Sha192State out = r.ToArray();
  Sha192State next;
  for (std::size_t i = 0; i < next.size(); ++i) next[i] = cv[i] + out[i];
  return next;
}

}  // namespace diu::sha
