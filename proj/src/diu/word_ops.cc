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

#include "diu/word_ops.h"

#include <algorithm>
#include <string>

#include "diu/error.h"

namespace diu {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kLengthOverflow: return "LengthOverflow";
    case ErrorCode::kUseAfterFinalize: return "UseAfterFinalize";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kBlockExhausted: return "BlockExhausted";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDigestLengthMismatch: return "DigestLengthMismatch";
    case ErrorCode::kDuplicateVector: return "DuplicateVector";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Word add32(std::span<const Word> terms) {
  if (terms.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "add32 needs at least one term");
  }
  Word sum = 0;
  for (Word t : terms) sum += t;  // unsigned wraparound is mod 2^32
  return sum;
}

Word add32(std::initializer_list<Word> terms) {
  return add32(std::span<const Word>(terms.begin(), terms.size()));
}

std::uint64_t CheckedMessageBytes(std::uint64_t byte_count,
                                  std::uint64_t extra) {
  if (byte_count > kMaxMessageBytes || extra > kMaxMessageBytes - byte_count) {
    throw Error(ErrorCode::kLengthOverflow,
                "message length reaches 2^64 bits");
  }
  return byte_count + extra;
}

std::vector<Block> PadTail(std::span<const Byte> tail,
                           std::uint64_t total_bytes, LengthEncoding enc) {
  if (tail.size() >= kBlockBytes) {
    throw Error(ErrorCode::kInvalidArgument, "padding tail exceeds a block");
  }
  CheckedMessageBytes(total_bytes, 0);
  const std::uint64_t bit_length = total_bytes * 8;

  // One block if the tail, the 0x80 marker and the length field fit.
  const std::size_t count = tail.size() + 1 + 8 <= kBlockBytes ? 1 : 2;
  std::vector<Block> out(count, Block{});
  Byte* flat = out.front().data();
  auto at = [&](std::size_t i) -> Byte& {
    return out[i / kBlockBytes][i % kBlockBytes];
  };
  std::copy(tail.begin(), tail.end(), flat);
  at(tail.size()) = 0x80;

  const std::size_t len_pos = count * kBlockBytes - 8;
  for (int i = 0; i < 8; ++i) {
    const int shift = enc == LengthEncoding::kLittleEndian64 ? 8 * i
                                                             : 8 * (7 - i);
    at(len_pos + i) = static_cast<Byte>(bit_length >> shift);
  }
  return out;
}

std::vector<Block> pad_message(std::span<const Byte> message,
                               std::uint64_t bit_length, LengthEncoding enc) {
  CheckedMessageBytes(message.size(), 0);
  if (bit_length != std::uint64_t{message.size()} * 8) {
    throw Error(ErrorCode::kInvalidArgument,
                "bit_length must be 8 * message size");
  }
  const std::size_t full = message.size() / kBlockBytes;
  std::vector<Block> blocks(full);
  for (std::size_t i = 0; i < full; ++i) {
    std::copy_n(message.data() + i * kBlockBytes, kBlockBytes,
                blocks[i].begin());
  }
  auto tail = PadTail(message.subspan(full * kBlockBytes), message.size(), enc);
  blocks.insert(blocks.end(), tail.begin(), tail.end());
  return blocks;
}

BlockWords words_from_block(const Block& block, ByteOrder order) {
  BlockWords w;
  for (std::size_t i = 0; i < kBlockWords; ++i) {
    w[i] = LoadWord(block.data() + 4 * i, order);
  }
  return w;
}

Block block_from_words(const BlockWords& words, ByteOrder order) {
  Block b;
  for (std::size_t i = 0; i < kBlockWords; ++i) {
    StoreWord(words[i], b.data() + 4 * i, order);
  }
  return b;
}

Bytes serialize_digest(std::span<const Word> state, ByteOrder order) {
  if (state.size() < 4 || state.size() > 6) {
    throw Error(ErrorCode::kArityMismatch,
                "chaining state must have 4, 5 or 6 words, got " +
                    std::to_string(state.size()));
  }
  Bytes out(4 * state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    StoreWord(state[i], out.data() + 4 * i, order);
  }
  return out;
}

}  // namespace diu
