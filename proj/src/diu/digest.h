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

#ifndef DIU_DIGEST_H_
#define DIU_DIGEST_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "diu/word_ops.h"

namespace diu {

enum class Algorithm { kMd5, kSha1, kSha192 };

const char* AlgorithmName(Algorithm alg);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);
std::size_t DigestSize(Algorithm alg);
// Whether the unified core has a mode for `alg` (MD5 and SHA-192 only).
bool HasUnifiedMode(Algorithm alg);

// Streaming digest state: chaining words, a partial-block buffer and the
// running message length. With `unified` set, blocks are compressed through
// the unified datapath instead of the standalone engine.
//
// A context is a plain value; copies hash independently.
class HashContext {
 public:
  explicit HashContext(Algorithm alg, bool unified = false);

  // Throws kUseAfterFinalize after finalize() and kLengthOverflow once the
  // message would reach 2^64 bits.
  void update(std::span<const Byte> data);
  Bytes finalize();

  Algorithm algorithm() const { return alg_; }
  bool unified() const { return unified_; }
  std::uint64_t bytes_processed() const { return total_bytes_; }

 private:
  void Compress(const Block& block);

  Algorithm alg_;
  bool unified_;
  bool finalized_ = false;
  std::array<Word, 6> state_{};
  std::size_t state_words_;
  Block buffer_{};
  std::size_t buffered_ = 0;
  std::uint64_t total_bytes_ = 0;
};

// One-shot digest.
Bytes Digest(Algorithm alg, std::span<const Byte> message,
             bool unified = false);

namespace md5 {
inline HashContext init() { return HashContext(Algorithm::kMd5); }
}  // namespace md5

namespace sha {
inline HashContext sha1_init() { return HashContext(Algorithm::kSha1); }
inline HashContext sha192_init() { return HashContext(Algorithm::kSha192); }
}  // namespace sha

}  // namespace diu

#endif  // DIU_DIGEST_H_
