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

#include "diu/unified.h"

#include <algorithm>
#include <string>

#include "diu/error.h"
#include "diu/md5.h"
#include "diu/sha.h"

namespace diu::unified {

const char* ModeName(Mode mode) {
  return mode == Mode::kMd5 ? "md5" : "sha192";
}

int StepCount(Mode mode) {
  return mode == Mode::kMd5 ? md5::kSteps : sha::kSteps;
}

std::size_t ChainingWords(Mode mode) {
  return mode == Mode::kMd5 ? md5::kStateWords : sha::Sha192State{}.size();
}

namespace {

ByteOrder OrderFor(Mode mode) {
  return mode == Mode::kMd5 ? md5::kByteOrder : sha::kByteOrder;
}

// First lane carrying live data.
int FirstLane(Mode mode) { return mode == Mode::kMd5 ? kLaneB : kLaneA; }

// Shared functional units. Every step of either mode is composed from these.
Word ModularAdder(Word x, Word y) { return x + y; }
Word VariableRotator(Word x, int amount) { return rotl(x, amount); }
Word FixedRotator30(Word x) { return rotl(x, 30); }
Word FixedRotator15(Word x) { return rotl(x, 15); }

Word NonlinearUnit(Mode mode, int t, Word x, Word y, Word z) {
  return mode == Mode::kMd5 ? md5::aux(t / 16 + 1, x, y, z)
                            : sha::f(t, x, y, z);
}

}  // namespace

void UnifiedCore::load_block(std::span<const Word> cv, const Block& block) {
  if (cv.size() != ChainingWords(mode_)) {
    throw Error(ErrorCode::kArityMismatch,
                std::string(ModeName(mode_)) + " mode takes a " +
                    std::to_string(ChainingWords(mode_)) +
                    "-word chaining state, got " + std::to_string(cv.size()));
  }
  if (loaded_ && step_ > 0 && step_ < StepCount(mode_)) {
    throw Error(ErrorCode::kInvalidState, "core is part way through a block");
  }

  regs_.fill(0);
  const int first = FirstLane(mode_);
  for (std::size_t i = 0; i < cv.size(); ++i) regs_[first + i] = cv[i];
  chaining_ = regs_;

  const BlockWords words = words_from_block(block, OrderFor(mode_));
  if (mode_ == Mode::kSha192) {
    words_ = sha::expand_schedule(words);
  } else {
    words_.fill(0);
    std::copy(words.begin(), words.end(), words_.begin());
  }
  step_ = 0;
  loaded_ = true;
}

StepTrace UnifiedCore::step() {
  if (!loaded_) throw Error(ErrorCode::kInvalidState, "no block loaded");
  if (step_ >= StepCount(mode_)) {
    throw Error(ErrorCode::kBlockExhausted,
                "step " + std::to_string(step_) + " is past the end of a " +
                    ModeName(mode_) + " block");
  }
  const int t = step_;
  const Lanes in = regs_;
  Lanes out{};

  if (mode_ == Mode::kMd5) {
    const int round = t / 16 + 1;
    const int j = t % 16;
    const Word x = words_[md5::msg_index(round, j)];
    const Word f = NonlinearUnit(mode_, t, in[kLaneC], in[kLaneD], in[kLaneE]);
    Word acc = ModularAdder(in[kLaneB], f);
    acc = ModularAdder(acc, x);
    acc = ModularAdder(acc, md5::t_table()[t]);
    acc = VariableRotator(acc, md5::shift_amount(round, j));
    acc = ModularAdder(acc, in[kLaneC]);
    out[kLaneB] = in[kLaneE];
    out[kLaneC] = acc;
    out[kLaneD] = in[kLaneC];
    out[kLaneE] = in[kLaneD];
  } else {
    const Word f = NonlinearUnit(mode_, t, in[kLaneB], in[kLaneC], in[kLaneD]);
    Word temp1 = ModularAdder(VariableRotator(in[kLaneA], 5), f);
    temp1 = ModularAdder(temp1, in[kLaneE]);
    temp1 = ModularAdder(temp1, words_[t]);
    temp1 = ModularAdder(temp1, sha::k(t));
    const Word temp2 =
        ModularAdder(ModularAdder(temp1, in[kLaneA]), in[kLaneF]);
    out[kLaneA] = temp2;
    out[kLaneB] = FixedRotator15(in[kLaneA]);
    out[kLaneC] = FixedRotator30(in[kLaneB]);
    out[kLaneD] = in[kLaneC];
    out[kLaneE] = in[kLaneD];
    out[kLaneF] = temp1;
  }

  regs_ = out;
  ++step_;
  return {t, mode_, regs_};
}

std::vector<Word> UnifiedCore::run_block() {
  if (!loaded_ || step_ != 0) {
    throw Error(ErrorCode::kInvalidState, "run_block needs a freshly loaded core");
  }
  const int steps = StepCount(mode_);
  while (step_ < steps) step();

  const int first = FirstLane(mode_);
  std::vector<Word> next(ChainingWords(mode_));
  for (std::size_t i = 0; i < next.size(); ++i) {
    next[i] = ModularAdder(chaining_[first + i], regs_[first + i]);
  }
  return next;
}

Bytes unified_digest(Mode mode, std::span<const Byte> message) {
  const ByteOrder order = OrderFor(mode);
  const auto blocks =
      pad_message(message, CheckedMessageBytes(message.size(), 0) * 8,
                  LengthEncodingFor(order));
  std::vector<Word> cv;
  if (mode == Mode::kMd5) {
    const auto iv = md5::kInitialState.ToArray();
    cv.assign(iv.begin(), iv.end());
  } else {
    cv.assign(sha::kSha192InitialState.begin(), sha::kSha192InitialState.end());
  }
  UnifiedCore core(mode);
  for (const Block& block : blocks) {
    core.load_block(cv, block);
    cv = core.run_block();
  }
  return serialize_digest(cv, order);
}

bool ResourceReport::UnifiedSavesUnits() const {
  const ResourceRow& a = md5_only;
  const ResourceRow& b = sha192_only;
  const ResourceRow& u = unified;
  return u.modular_adders <= a.modular_adders + b.modular_adders &&
         u.fixed_rotators <= a.fixed_rotators + b.fixed_rotators &&
         u.variable_rotators <= a.variable_rotators + b.variable_rotators &&
         u.nonlinear_units <= a.nonlinear_units + b.nonlinear_units &&
         u.registers_32bit <= a.registers_32bit + b.registers_32bit &&
         u.Total() < a.Total() + b.Total();
}

ResourceReport resource_report() {
  ResourceReport r;
  // MD5 step: three adders before the rotation, one after; rotation amount
  // varies per step.
  r.md5_only = {Configuration::kMd5Only, /*modular_adders=*/4,
                /*fixed_rotators=*/0, /*variable_rotators=*/1,
                /*nonlinear_units=*/1, /*registers_32bit=*/4,
                /*mode_muxes=*/0};
  // SHA-192 step: four adders for TEMP1, two more for TEMP2; S5, S30, S15.
  r.sha192_only = {Configuration::kSha192Only, 6, 3, 0, 1, 6, 0};
  // The variable rotator also serves S5. One write-select mux per lane.
  r.unified = {Configuration::kUnified, 6, 2, 1, 1, 6, kLaneCount};
  return r;
}

}  // namespace diu::unified
