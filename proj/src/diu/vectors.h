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
// Known-answer vectors and the self-test runner.
//
// Vector file grammar (UTF-8, one record per line):
//
//   # comment
//   <alg>,<message-hex>,<digest-hex>
//
// where <alg> is md5, sha1 or sha192 and an empty message is an empty hex
// field. Blank lines are ignored.

#ifndef DIU_VECTORS_H_
#define DIU_VECTORS_H_

#include <string>
#include <string_view>
#include <vector>

#include "diu/digest.h"

namespace diu {

struct TestVector {
  Algorithm algorithm;
  Bytes message;
  Bytes digest;
  int line = 0;  // 1-based source line

  // Short human-readable name, e.g. "line 12 sha192 (3-byte message)".
  std::string Name() const;
};

// Throws kParseError (message carries the line number),
// kDigestLengthMismatch or kDuplicateVector.
std::vector<TestVector> ParseVectors(std::string_view text);

// Reads and parses a vector file; throws kIoError if it cannot be read.
std::vector<TestVector> load_vectors(const std::string& path);

// The frozen vector set compiled into the library.
std::string_view DefaultVectorText();
std::vector<TestVector> DefaultVectors();

struct SelftestReport {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;
};

// MD5 and SHA-192 vectors must match through both the standalone engine and
// the unified core; SHA-1 vectors only through the standalone engine.
SelftestReport run_selftest(const std::vector<TestVector>& vectors);

std::string ToHex(std::span<const Byte> bytes);
// Throws kParseError on odd length or a non-hex digit.
Bytes FromHex(std::string_view hex);

}  // namespace diu

#endif  // DIU_VECTORS_H_
