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

#include "diu/vectors.h"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "diu/error.h"
#include "diu/unified.h"

namespace diu {

namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string_view Trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

Error LineError(ErrorCode code, int line, const std::string& what) {
  return Error(code, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string ToHex(std::span<const Byte> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (Byte b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

Bytes FromHex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::kParseError, "odd-length hex string");
  }
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int hi = HexValue(hex[2 * i]);
    const int lo = HexValue(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::kParseError, "invalid hex digit");
    }
    out[i] = static_cast<Byte>(hi << 4 | lo);
  }
  return out;
}

std::string TestVector::Name() const {
  return "line " + std::to_string(line) + " " + AlgorithmName(algorithm) +
         " (" + std::to_string(message.size()) + "-byte message)";
}

std::vector<TestVector> ParseVectors(std::string_view text) {
  std::vector<TestVector> out;
  std::set<std::pair<Algorithm, Bytes>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos ||
        line.find(',', c2 + 1) != std::string_view::npos) {
      throw LineError(ErrorCode::kParseError, line_no,
                      "expected <alg>,<message-hex>,<digest-hex>");
    }
    const auto alg = ParseAlgorithm(Trim(line.substr(0, c1)));
    if (!alg) {
      throw LineError(ErrorCode::kParseError, line_no,
                      "unknown algorithm '" +
                          std::string(line.substr(0, c1)) + "'");
    }
    TestVector v{*alg, {}, {}, line_no};
    try {
      v.message = FromHex(Trim(line.substr(c1 + 1, c2 - c1 - 1)));
      v.digest = FromHex(Trim(line.substr(c2 + 1)));
    } catch (const Error& e) {
      throw LineError(ErrorCode::kParseError, line_no, e.what());
    }
    if (v.digest.size() != DigestSize(v.algorithm)) {
      throw LineError(ErrorCode::kDigestLengthMismatch, line_no,
                      std::string(AlgorithmName(v.algorithm)) + " digest has " +
                          std::to_string(v.digest.size()) + " bytes, want " +
                          std::to_string(DigestSize(v.algorithm)));
    }
    if (!seen.emplace(v.algorithm, v.message).second) {
      throw LineError(ErrorCode::kDuplicateVector, line_no,
                      "duplicate vector for this algorithm and message");
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<TestVector> load_vectors(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "cannot read " + path);
  return ParseVectors(text.str());
}

std::vector<TestVector> DefaultVectors() {
  return ParseVectors(DefaultVectorText());
}

SelftestReport run_selftest(const std::vector<TestVector>& vectors) {
  SelftestReport report;
  for (const TestVector& v : vectors) {
    std::string detail;
    const Bytes standalone = Digest(v.algorithm, v.message);
    if (standalone != v.digest) {
      detail = "standalone " + ToHex(standalone);
    }
    if (HasUnifiedMode(v.algorithm)) {
      const Bytes via_core = unified::unified_digest(
          v.algorithm == Algorithm::kMd5 ? unified::Mode::kMd5
                                         : unified::Mode::kSha192,
          v.message);
      if (via_core != v.digest) {
        if (!detail.empty()) detail += ", ";
        detail += "unified " + ToHex(via_core);
      }
    }
    if (detail.empty()) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failures.push_back(v.Name() + ": expected " + ToHex(v.digest) +
                                ", got " + detail);
    }
  }
  return report;
}

}  // namespace diu
