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
// diu: command-line front end for libdiu.
//
//   diu hash --alg md5|sha1|sha192 [--unified] [--tagged] [FILE|-]
//   diu selftest [--vectors FILE]
//   diu bench --alg ALG [--bytes N] [--reps N] [--unified] [--verify]
//   diu trace --alg md5|sha192 [--message HEX] [--block N]
//   diu report
//
// Exit codes: 0 success, 1 self-test mismatch, 2 usage or I/O error.
// Results go to stdout, diagnostics to stderr.

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <memory>
#include <random>
#include <string>
#include <vector>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "diu/diu.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int Report(diu_status status, const char* context) {
  const char* detail = diu_last_error();
  std::fprintf(stderr, "diu: %s: %s%s%s\n", context,
               diu_status_string(status), *detail ? ": " : "", detail);
  return kExitUsage;
}

int Usage(const std::string& message) {
  std::fprintf(stderr, "diu: %s\n", message.c_str());
  return kExitUsage;
}

std::string Hex(const uint8_t* data, size_t len) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (size_t i = 0; i < len; ++i) {
    out.push_back(kDigits[data[i] >> 4]);
    out.push_back(kDigits[data[i] & 0xF]);
  }
  return out;
}

bool ParseHex(const std::string& hex, std::vector<uint8_t>* out) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) return false;
  out->clear();
  for (size_t i = 0; i < hex.size(); i += 2) {
    const int hi = nibble(hex[i]);
    const int lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) return false;
    out->push_back(static_cast<uint8_t>(hi << 4 | lo));
  }
  return true;
}

struct HashDeleter {
  void operator()(diu_hash* h) const { diu_hash_free(h); }
};
struct VectorsDeleter {
  void operator()(diu_vectors* v) const { diu_vectors_free(v); }
};
struct SelftestDeleter {
  void operator()(diu_selftest* r) const { diu_selftest_free(r); }
};

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f != stdin) std::fclose(f);
  }
};

// ---- hash -----------------------------------------------------------------

struct HashOptions {
  std::string alg;
  bool unified = false;
  bool tagged = false;
  std::string input = "-";
};

int CmdHash(const HashOptions& opt) {
  diu_algorithm alg;
  if (diu_algorithm_from_name(opt.alg.c_str(), &alg) != DIU_OK) {
    return Usage("unknown algorithm '" + opt.alg + "'");
  }
  if (opt.unified && alg == DIU_ALG_SHA1) {
    return Usage("--unified is only available for md5 and sha192");
  }

  std::unique_ptr<std::FILE, FileCloser> in(
      opt.input == "-" ? stdin : std::fopen(opt.input.c_str(), "rb"));
  if (!in) {
    return Usage("cannot open " + opt.input + ": " + std::strerror(errno));
  }

  diu_hash* raw = nullptr;
  if (diu_status s = diu_hash_new(alg, opt.unified ? 1 : 0, &raw); s != DIU_OK) {
    return Report(s, "hash");
  }
  std::unique_ptr<diu_hash, HashDeleter> ctx(raw);

  std::vector<uint8_t> buf(1 << 16);
  size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), in.get())) > 0) {
    if (diu_status s = diu_hash_update(ctx.get(), buf.data(), n); s != DIU_OK) {
      return Report(s, "hash");
    }
  }
  if (std::ferror(in.get())) return Usage("read error on " + opt.input);

  uint8_t digest[DIU_MAX_DIGEST_SIZE];
  size_t len = 0;
  if (diu_status s = diu_hash_final(ctx.get(), digest, sizeof(digest), &len);
      s != DIU_OK) {
    return Report(s, "hash");
  }
  if (opt.tagged) {
    std::printf("%s(%s)= %s\n", opt.alg.c_str(), opt.input.c_str(),
                Hex(digest, len).c_str());
  } else {
    std::printf("%s\n", Hex(digest, len).c_str());
  }
  return kExitOk;
}

// ---- selftest -------------------------------------------------------------

int CmdSelftest(const std::string& vectors_path) {
  diu_vectors* raw = nullptr;
  const diu_status s = vectors_path.empty()
                           ? diu_vectors_load_default(&raw)
                           : diu_vectors_load_file(vectors_path.c_str(), &raw);
  if (s != DIU_OK) return Report(s, "selftest");
  std::unique_ptr<diu_vectors, VectorsDeleter> vectors(raw);

  diu_selftest* rraw = nullptr;
  if (diu_status rs = diu_selftest_run(vectors.get(), &rraw); rs != DIU_OK) {
    return Report(rs, "selftest");
  }
  std::unique_ptr<diu_selftest, SelftestDeleter> report(rraw);

  const size_t failed = diu_selftest_failed(report.get());
  for (size_t i = 0; i < failed; ++i) {
    std::printf("FAIL %s\n", diu_selftest_failure(report.get(), i));
  }
  std::printf("passed: %zu\nfailed: %zu\n", diu_selftest_passed(report.get()),
              failed);
  return failed == 0 ? kExitOk : kExitMismatch;
}

// ---- bench ----------------------------------------------------------------

struct BenchOptions {
  std::string alg;
  int64_t bytes = 1 << 20;
  int64_t reps = 8;
  bool unified = false;
  bool verify = false;
};

int CmdBench(const BenchOptions& opt) {
  diu_algorithm alg;
  if (diu_algorithm_from_name(opt.alg.c_str(), &alg) != DIU_OK) {
    return Usage("unknown algorithm '" + opt.alg + "'");
  }
  if (opt.unified && alg == DIU_ALG_SHA1) {
    return Usage("--unified is only available for md5 and sha192");
  }
  if (opt.bytes < 1 || opt.reps < 1) {
    return Usage("--bytes and --reps must be at least 1");
  }

  std::vector<uint8_t> payload(static_cast<size_t>(opt.bytes));
  std::mt19937_64 rng(0x5eed);
  for (auto& b : payload) b = static_cast<uint8_t>(rng());

  const int unified = opt.unified ? 1 : 0;
  uint8_t reference[DIU_MAX_DIGEST_SIZE];
  size_t len = 0;
  if (diu_status s = diu_digest(alg, unified, payload.data(), payload.size(),
                                reference, sizeof(reference), &len);
      s != DIU_OK) {
    return Report(s, "bench");
  }

  bool mismatch = false;
  const auto start = std::chrono::steady_clock::now();
  for (int64_t r = 0; r < opt.reps; ++r) {
    uint8_t digest[DIU_MAX_DIGEST_SIZE];
    if (diu_status s = diu_digest(alg, unified, payload.data(), payload.size(),
                                  digest, sizeof(digest), &len);
        s != DIU_OK) {
      return Report(s, "bench");
    }
    if (opt.verify && std::memcmp(digest, reference, len) != 0) mismatch = true;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  const double seconds = std::max(
      std::chrono::duration<double>(elapsed).count(), 1e-9);
  const double mbps =
      static_cast<double>(opt.bytes) * static_cast<double>(opt.reps) / 1e6 /
      seconds;

  std::printf("%s %.3f\n", opt.alg.c_str(), mbps);
  if (opt.verify) {
    std::printf("digest %s\n", Hex(reference, len).c_str());
    if (mismatch) {
      std::fprintf(stderr, "diu: bench: repeated digest differs from one-shot\n");
      return kExitMismatch;
    }
  }
  return kExitOk;
}

// ---- trace ----------------------------------------------------------------

struct TraceOptions {
  std::string alg;
  std::string message_hex;
  int64_t block = 0;
};

int CmdTrace(const TraceOptions& opt) {
  diu_mode mode;
  if (opt.alg == "md5") {
    mode = DIU_MODE_MD5;
  } else if (opt.alg == "sha192") {
    mode = DIU_MODE_SHA192;
  } else {
    return Usage("trace supports md5 and sha192, not '" + opt.alg + "'");
  }
  std::vector<uint8_t> message;
  if (!ParseHex(opt.message_hex, &message)) {
    return Usage("--message is not valid even-length hex");
  }
  if (opt.block < 0) return Usage("--block must be non-negative");

  std::vector<diu_trace_entry> entries(80);
  size_t count = 0;
  if (diu_status s = diu_trace(mode, message.data(), message.size(),
                               static_cast<uint64_t>(opt.block),
                               entries.data(), entries.size(), &count);
      s != DIU_OK) {
    return Report(s, "trace");
  }
  for (size_t i = 0; i < count; ++i) {
    const auto& e = entries[i];
    std::printf("t=%" PRIu32 " A=%08" PRIx32 " B=%08" PRIx32 " C=%08" PRIx32
                " D=%08" PRIx32 " E=%08" PRIx32 " F=%08" PRIx32 "\n",
                e.step, e.regs[0], e.regs[1], e.regs[2], e.regs[3], e.regs[4],
                e.regs[5]);
  }
  return kExitOk;
}

// ---- report ---------------------------------------------------------------

int CmdReport() {
  diu_resource_row rows[3];
  int saves = 0;
  if (diu_status s = diu_resource_report(rows, &saves); s != DIU_OK) {
    return Report(s, "report");
  }
  auto line = [&](const char* name, uint32_t diu_resource_row::*field) {
    std::printf("%s: md5=%" PRIu32 " sha192=%" PRIu32 " unified=%" PRIu32 "\n",
                name, rows[0].*field, rows[1].*field, rows[2].*field);
  };
  line("modular_adders", &diu_resource_row::modular_adders);
  line("fixed_rotators", &diu_resource_row::fixed_rotators);
  line("variable_rotators", &diu_resource_row::variable_rotators);
  line("nonlinear_units", &diu_resource_row::nonlinear_units);
  line("registers_32bit", &diu_resource_row::registers_32bit);
  line("total", &diu_resource_row::total);
  line("mode_muxes", &diu_resource_row::mode_muxes);
  std::printf("standalone_sum_total: %" PRIu32 "\n",
              rows[0].total + rows[1].total);
  std::printf("unified_saves_units: %s\n", saves ? "true" : "false");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diu: MD5, SHA-1 and SHA-192 digests with a unified MD5/SHA-192 "
               "datapath model"};
  app.require_subcommand(1);

  HashOptions hash_opt;
  auto* hash = app.add_subcommand("hash", "Print the digest of a file or stdin");
  hash->add_option("--alg", hash_opt.alg, "md5, sha1 or sha192")->required();
  hash->add_flag("--unified", hash_opt.unified,
                 "Compress through the unified datapath");
  hash->add_flag("--tagged", hash_opt.tagged, "Print <alg>(<file>)= <hex>");
  hash->add_option("input", hash_opt.input, "Input file, '-' for stdin");

  std::string vectors_path;
  auto* selftest =
      app.add_subcommand("selftest", "Check the known-answer vectors");
  selftest->add_option("--vectors", vectors_path,
                       "Vector file (default: built-in set)");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Measure hashing throughput");
  bench->add_option("--alg", bench_opt.alg, "md5, sha1 or sha192")->required();
  bench->add_option("--bytes", bench_opt.bytes, "Payload size in bytes");
  bench->add_option("--reps", bench_opt.reps, "Repetitions");
  bench->add_flag("--unified", bench_opt.unified,
                  "Compress through the unified datapath");
  bench->add_flag("--verify", bench_opt.verify,
                  "Check every repetition against the one-shot digest");

  TraceOptions trace_opt;
  auto* trace = app.add_subcommand("trace", "Dump per-step register values");
  trace->add_option("--alg", trace_opt.alg, "md5 or sha192")->required();
  trace->add_option("--message", trace_opt.message_hex, "Message as hex");
  trace->add_option("--block", trace_opt.block, "Block index (default 0)");

  auto* report = app.add_subcommand("report", "Print the resource model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kExitUsage;
  }

  if (*hash) return CmdHash(hash_opt);
  if (*selftest) return CmdSelftest(vectors_path);
  if (*bench) return CmdBench(bench_opt);
  if (*trace) return CmdTrace(trace_opt);
  if (*report) return CmdReport();
  return kExitUsage;
}
