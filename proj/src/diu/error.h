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

#ifndef DIU_ERROR_H_
#define DIU_ERROR_H_

#include <stdexcept>
#include <string>

namespace diu {

// Values mirror diu_status in include/diu/diu.h.
enum class ErrorCode {
  kInvalidArgument = 1,
  kLengthOverflow = 2,
  kUseAfterFinalize = 3,
  kArityMismatch = 4,
  kBlockExhausted = 5,
  kInvalidState = 6,
  kParseError = 7,
  kDigestLengthMismatch = 8,
  kDuplicateVector = 9,
  kIoError = 10,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace diu

#endif  // DIU_ERROR_H_
