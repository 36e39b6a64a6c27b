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
// 32-bit word primitives, Merkle-Damgard padding and block/digest
// serialization shared by every digest in the library.

#ifndef DIU_WORD_OPS_H_
#define DIU_WORD_OPS_H_

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace diu {

using Word = std::uint32_t;
using Byte = std::uint8_t;
using Bytes = std::vector<Byte>;

inline constexpr std::size_t kBlockBytes = 64;
inline constexpr std::size_t kBlockWords = 16;

using Block = std::array<Byte, kBlockBytes>;
using BlockWords = std::array<Word, kBlockWords>;

// Byte order used when a block is split into words and when a chaining
// state is written out as a digest. MD5 is little-endian throughout, the SHA
// family big-endian.
enum class ByteOrder { kLittle, kBig };

// Encoding of the trailing 64-bit message-length field.
enum class LengthEncoding { kLittleEndian64, kBigEndian64 };

constexpr LengthEncoding LengthEncodingFor(ByteOrder order) {
  return order == ByteOrder::kLittle ? LengthEncoding::kLittleEndian64
                                     : LengthEncoding::kBigEndian64;
}

// Circular left shift. The SHA notation S_n(x) is rotl(x, n).
constexpr Word rotl(Word x, int n) {
  assert(n >= 0 && n <= 31);
  return std::rotl(x, n);
}

// Sum modulo 2^32. Throws kInvalidArgument on an empty term list.
Word add32(std::span<const Word> terms);
Word add32(std::initializer_list<Word> terms);

// Largest byte count whose bit length still fits below 2^64.
inline constexpr std::uint64_t kMaxMessageBytes =
    (std::uint64_t{1} << 61) - 1;

// Returns byte_count + extra, throwing kLengthOverflow if the bit length of
// the result would reach 2^64.
std::uint64_t CheckedMessageBytes(std::uint64_t byte_count,
                                  std::uint64_t extra);

// Pads a whole message: message || 0x80 || 0x00* || 64-bit length.
// bit_length must equal 8 * message.size().
std::vector<Block> pad_message(std::span<const Byte> message,
                               std::uint64_t bit_length, LengthEncoding enc);

// Pads the final partial block of a streamed message. `tail` holds the
// (< 64) bytes not yet compressed and `total_bytes` the length of the whole
// message. Returns one or two blocks.
std::vector<Block> PadTail(std::span<const Byte> tail,
                           std::uint64_t total_bytes, LengthEncoding enc);

BlockWords words_from_block(const Block& block, ByteOrder order);
Block block_from_words(const BlockWords& words, ByteOrder order);

// Writes each chaining word in `order`; 4 bytes per word.
Bytes serialize_digest(std::span<const Word> state, ByteOrder order);

inline Word LoadWord(const Byte* p, ByteOrder order) {
  if (order == ByteOrder::kLittle) {
    return Word{p[0]} | Word{p[1]} << 8 | Word{p[2]} << 16 |
           Word{p[3]} << 24;
  }
  return Word{p[3]} | Word{p[2]} << 8 | Word{p[1]} << 16 | Word{p[0]} << 24;
}

inline void StoreWord(Word w, Byte* p, ByteOrder order) {
  for (int i = 0; i < 4; ++i) {
    const int shift = order == ByteOrder::kLittle ? 8 * i : 8 * (3 - i);
    p[i] = static_cast<Byte>(w >> shift);
  }
}

}  // namespace diu

#endif  // DIU_WORD_OPS_H_
