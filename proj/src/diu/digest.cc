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

#include "diu/digest.h"

#include <algorithm>
#include <string>

#include "diu/error.h"
#include "diu/md5.h"
#include "diu/sha.h"
#include "diu/unified.h"

namespace diu {

const char* AlgorithmName(Algorithm alg) {
  switch (alg) {
    case Algorithm::kMd5: return "md5";
    case Algorithm::kSha1: return "sha1";
    case Algorithm::kSha192: return "sha192";
  }
  return "?";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  if (name == "md5") return Algorithm::kMd5;
  if (name == "sha1") return Algorithm::kSha1;
  if (name == "sha192") return Algorithm::kSha192;
  return std::nullopt;
}

std::size_t DigestSize(Algorithm alg) {
  switch (alg) {
    case Algorithm::kMd5: return md5::kDigestBytes;
    case Algorithm::kSha1: return sha::kSha1DigestBytes;
    case Algorithm::kSha192: return sha::kSha192DigestBytes;
  }
  return 0;
}

bool HasUnifiedMode(Algorithm alg) { return alg != Algorithm::kSha1; }

namespace {

ByteOrder OrderOf(Algorithm alg) {
  return alg == Algorithm::kMd5 ? md5::kByteOrder : sha::kByteOrder;
}

}  // namespace

HashContext::HashContext(Algorithm alg, bool unified)
    : alg_(alg), unified_(unified), state_words_(DigestSize(alg) / 4) {
  if (unified && !HasUnifiedMode(alg)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("no unified mode for ") + AlgorithmName(alg));
  }
  switch (alg) {
    case Algorithm::kMd5: {
      const auto iv = md5::kInitialState.ToArray();
      std::copy(iv.begin(), iv.end(), state_.begin());
      break;
    }
    case Algorithm::kSha1:
      std::copy(sha::kSha1InitialState.begin(), sha::kSha1InitialState.end(),
                state_.begin());
      break;
    case Algorithm::kSha192:
      std::copy(sha::kSha192InitialState.begin(),
                sha::kSha192InitialState.end(), state_.begin());
      break;
  }
}

void HashContext::Compress(const Block& block) {
  std::span<Word> state(state_.data(), state_words_);
  if (unified_) {
    unified::UnifiedCore core(alg_ == Algorithm::kMd5 ? unified::Mode::kMd5
                                                      : unified::Mode::kSha192);
    core.load_block(state, block);
    const auto next = core.run_block();
    std::copy(next.begin(), next.end(), state.begin());
    return;
  }
  switch (alg_) {
    case Algorithm::kMd5: {
      const auto next =
          md5::compress(md5::State::FromArray(state), block).ToArray();
      std::copy(next.begin(), next.end(), state.begin());
      break;
    }
    case Algorithm::kSha1: {
      sha::Sha1State cv;
      std::copy(state.begin(), state.end(), cv.begin());
      const auto next = sha::sha1_compress(cv, block);
      std::copy(next.begin(), next.end(), state.begin());
      break;
    }
    case Algorithm::kSha192: {
      sha::Sha192State cv;
      std::copy(state.begin(), state.end(), cv.begin());
      const auto next = sha::sha192_compress(cv, block);
      std::copy(next.begin(), next.end(), state.begin());
      break;
    }
  }
}

void HashContext::update(std::span<const Byte> data) {
  if (finalized_) {
    throw Error(ErrorCode::kUseAfterFinalize, "update after finalize");
  }
  total_bytes_ = CheckedMessageBytes(total_bytes_, data.size());

  if (buffered_ > 0) {
    const std::size_t take = std::min(kBlockBytes - buffered_, data.size());
    std::copy_n(data.begin(), take, buffer_.begin() + buffered_);
    buffered_ += take;
    data = data.subspan(take);
    if (buffered_ < kBlockBytes) return;
    Compress(buffer_);
    buffered_ = 0;
  }
  while (data.size() >= kBlockBytes) {
    Block block;
    std::copy_n(data.begin(), kBlockBytes, block.begin());
    Compress(block);
    data = data.subspan(kBlockBytes);
  }
  std::copy(data.begin(), data.end(), buffer_.begin());
  buffered_ = data.size();
}

Bytes HashContext::finalize() {
  if (finalized_) {
    throw Error(ErrorCode::kUseAfterFinalize, "finalize called twice");
  }
  finalized_ = true;
  const ByteOrder order = OrderOf(alg_);
  for (const Block& block :
       PadTail(std::span<const Byte>(buffer_.data(), buffered_), total_bytes_,
               LengthEncodingFor(order))) {
    Compress(block);
  }
  return serialize_digest(std::span<const Word>(state_.data(), state_words_),
                          order);
}

Bytes Digest(Algorithm alg, std::span<const Byte> message, bool unified) {
  HashContext ctx(alg, unified);
  ctx.update(message);
  return ctx.finalize();
}

}  // namespace diu
