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
// Functional model of a mode-select datapath that runs MD5 and SHA-192 on
// one six-lane register file (lanes A..F) with a shared bank of modulo-2^32
// adders, one variable rotator, two fixed rotators and one nonlinear-function
// unit.
//
// Lane usage per mode:
//
//            A       B     C     D     E     F
//   Md5    parked    a     b     c     d   parked
//   Sha192   A       B     C     D     E     F
//
// Parked lanes hold zero and never reach the digest. The model is per-step,
// not cycle accurate; there is no clock and no pipeline.

#ifndef DIU_UNIFIED_H_
#define DIU_UNIFIED_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "diu/word_ops.h"

namespace diu::unified {

enum class Mode { kMd5, kSha192 };

const char* ModeName(Mode mode);
int StepCount(Mode mode);             // 64 or 80
std::size_t ChainingWords(Mode mode);  // 4 or 6

enum Lane { kLaneA = 0, kLaneB, kLaneC, kLaneD, kLaneE, kLaneF, kLaneCount };

using Lanes = std::array<Word, kLaneCount>;

struct StepTrace {
  int step = 0;  // index of the step just executed
  Mode mode = Mode::kMd5;
  Lanes regs{};
};

class UnifiedCore {
 public:
  explicit UnifiedCore(Mode mode) : mode_(mode) {}

  // Seeds the lanes from `cv` (4 words in Md5 mode, 6 in Sha192 mode) and
  // parses `block` in the mode's byte order. Throws kArityMismatch for a
  // wrong-sized cv and kInvalidState when called part way through a block.
  void load_block(std::span<const Word> cv, const Block& block);

  // Executes the next step. Throws kBlockExhausted past the final step and
  // kInvalidState when no block is loaded.
  StepTrace step();

  // Runs every step of a freshly loaded block and returns the chained
  // state (arity 4 or 6).
  std::vector<Word> run_block();

  Mode mode() const { return mode_; }
  const Lanes& regs() const { return regs_; }
  int step_index() const { return step_; }
  bool loaded() const { return loaded_; }

 private:
  Mode mode_;
  bool loaded_ = false;
  int step_ = 0;
  Lanes regs_{};
  Lanes chaining_{};
  // Md5 reads the 16 block words directly; Sha192 reads the expanded
  // schedule. One buffer serves both.
  std::array<Word, 80> words_{};
};

// Full padded-message digest computed through the unified core.
Bytes unified_digest(Mode mode, std::span<const Byte> message);

enum class Configuration { kMd5Only, kSha192Only, kUnified };

struct ResourceRow {
  Configuration config;
  int modular_adders = 0;
  int fixed_rotators = 0;
  int variable_rotators = 0;
  int nonlinear_units = 0;
  int registers_32bit = 0;
  int mode_muxes = 0;  // select-line overhead, not a functional unit

  int Total() const {
    return modular_adders + fixed_rotators + variable_rotators +
           nonlinear_units + registers_32bit;
  }
};

struct ResourceReport {
  ResourceRow md5_only;
  ResourceRow sha192_only;
  ResourceRow unified;

  // True when every unified count is at most the sum of the two standalone
  // rows and the unified total is strictly smaller.
  bool UnifiedSavesUnits() const;
};

// Static unit counts obtained from the step dataflow of each configuration.
ResourceReport resource_report();

}  // namespace diu::unified

#endif  // DIU_UNIFIED_H_
