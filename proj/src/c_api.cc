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
// extern "C" surface over the C++ core. Exceptions never cross this
// boundary; each entry point maps them to a diu_status and records the
// message for diu_last_error().

#include "diu/diu.h"

#include <algorithm>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "diu/digest.h"
#include "diu/error.h"
#include "diu/md5.h"
#include "diu/sha.h"
#include "diu/unified.h"
#include "diu/vectors.h"

struct diu_hash {
  diu::HashContext ctx;
};

struct diu_core {
  diu::unified::UnifiedCore core;
};

struct diu_vectors {
  std::vector<diu::TestVector> vectors;
};

struct diu_selftest {
  diu::SelftestReport report;
};

namespace {

thread_local std::string g_last_error;

diu_status Fail(diu_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
diu_status Guard(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const diu::Error& e) {
    return Fail(static_cast<diu_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(DIU_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(DIU_ERR_INTERNAL, e.what());
  }
}

bool ToAlgorithm(diu_algorithm alg, diu::Algorithm* out) {
  switch (alg) {
    case DIU_ALG_MD5: *out = diu::Algorithm::kMd5; return true;
    case DIU_ALG_SHA1: *out = diu::Algorithm::kSha1; return true;
    case DIU_ALG_SHA192: *out = diu::Algorithm::kSha192; return true;
  }
  return false;
}

bool ToMode(diu_mode mode, diu::unified::Mode* out) {
  switch (mode) {
    case DIU_MODE_MD5: *out = diu::unified::Mode::kMd5; return true;
    case DIU_MODE_SHA192: *out = diu::unified::Mode::kSha192; return true;
  }
  return false;
}

diu_status BadArgument(const char* what) {
  return Fail(DIU_ERR_INVALID_ARGUMENT, what);
}

diu_status CopyOut(const diu::Bytes& bytes, uint8_t* out, size_t out_cap,
                   size_t* out_len) {
  if (out_len) *out_len = bytes.size();
  if (!out || out_cap < bytes.size()) {
    return Fail(DIU_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  }
  std::copy(bytes.begin(), bytes.end(), out);
  return DIU_OK;
}

diu_trace_entry ToEntry(const diu::unified::StepTrace& t) {
  diu_trace_entry e;
  e.step = static_cast<uint32_t>(t.step);
  e.mode = t.mode == diu::unified::Mode::kMd5 ? DIU_MODE_MD5 : DIU_MODE_SHA192;
  std::copy(t.regs.begin(), t.regs.end(), e.regs);
  return e;
}

diu_resource_row ToRow(const diu::unified::ResourceRow& r,
                       diu_configuration config) {
  diu_resource_row row;
  row.config = config;
  row.modular_adders = static_cast<uint32_t>(r.modular_adders);
  row.fixed_rotators = static_cast<uint32_t>(r.fixed_rotators);
  row.variable_rotators = static_cast<uint32_t>(r.variable_rotators);
  row.nonlinear_units = static_cast<uint32_t>(r.nonlinear_units);
  row.registers_32bit = static_cast<uint32_t>(r.registers_32bit);
  row.mode_muxes = static_cast<uint32_t>(r.mode_muxes);
  row.total = static_cast<uint32_t>(r.Total());
  return row;
}

}  // namespace

extern "C" {

const char* diu_status_string(diu_status status) {
  switch (status) {
    case DIU_OK: return "ok";
    case DIU_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DIU_ERR_LENGTH_OVERFLOW: return "message length overflow";
    case DIU_ERR_USE_AFTER_FINALIZE: return "use after finalize";
    case DIU_ERR_ARITY_MISMATCH: return "chaining state arity mismatch";
    case DIU_ERR_BLOCK_EXHAUSTED: return "block exhausted";
    case DIU_ERR_INVALID_STATE: return "invalid state";
    case DIU_ERR_PARSE: return "parse error";
    case DIU_ERR_DIGEST_LENGTH_MISMATCH: return "digest length mismatch";
    case DIU_ERR_DUPLICATE_VECTOR: return "duplicate vector";
    case DIU_ERR_IO: return "i/o error";
    case DIU_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case DIU_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* diu_last_error(void) { return g_last_error.c_str(); }

diu_status diu_algorithm_from_name(const char* name, diu_algorithm* out) {
  if (!name || !out) return BadArgument("null argument");
  const auto alg = diu::ParseAlgorithm(name);
  if (!alg) {
    return BadArgument(
        (std::string("unknown algorithm '") + name + "'").c_str());
  }
  *out = static_cast<diu_algorithm>(static_cast<int>(*alg));
  return DIU_OK;
}

const char* diu_algorithm_name(diu_algorithm alg) {
  diu::Algorithm a;
  return ToAlgorithm(alg, &a) ? diu::AlgorithmName(a) : nullptr;
}

size_t diu_digest_size(diu_algorithm alg) {
  diu::Algorithm a;
  return ToAlgorithm(alg, &a) ? diu::DigestSize(a) : 0;
}

diu_status diu_hash_new(diu_algorithm alg, int unified, diu_hash** out) {
  return Guard([&] {
    diu::Algorithm a;
    if (!out || !ToAlgorithm(alg, &a)) return BadArgument("bad algorithm");
    *out = new diu_hash{diu::HashContext(a, unified != 0)};
    return DIU_OK;
  });
}

diu_status diu_hash_update(diu_hash* h, const uint8_t* data, size_t len) {
  return Guard([&] {
    if (!h || (!data && len > 0)) return BadArgument("null argument");
    h->ctx.update(std::span<const uint8_t>(data, len));
    return DIU_OK;
  });
}

diu_status diu_hash_final(diu_hash* h, uint8_t* out, size_t out_cap,
                          size_t* out_len) {
  return Guard([&] {
    if (!h) return BadArgument("null handle");
    if (!out || out_cap < diu::DigestSize(h->ctx.algorithm())) {
      if (out_len) *out_len = diu::DigestSize(h->ctx.algorithm());
      return Fail(DIU_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    }
    return CopyOut(h->ctx.finalize(), out, out_cap, out_len);
  });
}

void diu_hash_free(diu_hash* h) { delete h; }

diu_status diu_digest(diu_algorithm alg, int unified, const uint8_t* data,
                      size_t len, uint8_t* out, size_t out_cap,
                      size_t* out_len) {
  return Guard([&] {
    diu::Algorithm a;
    if (!ToAlgorithm(alg, &a)) return BadArgument("bad algorithm");
    if (!data && len > 0) return BadArgument("null data");
    return CopyOut(
        diu::Digest(a, std::span<const uint8_t>(data, len), unified != 0),
        out, out_cap, out_len);
  });
}

diu_status diu_core_new(diu_mode mode, diu_core** out) {
  return Guard([&] {
    diu::unified::Mode m;
    if (!out || !ToMode(mode, &m)) return BadArgument("bad mode");
    *out = new diu_core{diu::unified::UnifiedCore(m)};
    return DIU_OK;
  });
}

diu_status diu_core_load_block(diu_core* core, const uint32_t* cv,
                               size_t cv_words, const uint8_t* block) {
  return Guard([&] {
    if (!core || !cv || !block) return BadArgument("null argument");
    diu::Block b;
    std::copy_n(block, b.size(), b.begin());
    core->core.load_block(std::span<const uint32_t>(cv, cv_words), b);
    return DIU_OK;
  });
}

diu_status diu_core_step(diu_core* core, diu_trace_entry* out) {
  return Guard([&] {
    if (!core) return BadArgument("null handle");
    const auto trace = core->core.step();
    if (out) *out = ToEntry(trace);
    return DIU_OK;
  });
}

diu_status diu_core_run_block(diu_core* core, uint32_t* cv_out, size_t cv_cap,
                              size_t* cv_words) {
  return Guard([&] {
    if (!core || !cv_out) return BadArgument("null argument");
    const size_t need = diu::unified::ChainingWords(core->core.mode());
    if (cv_words) *cv_words = need;
    if (cv_cap < need) {
      return Fail(DIU_ERR_BUFFER_TOO_SMALL, "chaining buffer too small");
    }
    const auto next = core->core.run_block();
    std::copy(next.begin(), next.end(), cv_out);
    return DIU_OK;
  });
}

void diu_core_free(diu_core* core) { delete core; }

uint64_t diu_padded_block_count(uint64_t len) { return (len + 9 + 63) / 64; }

diu_status diu_trace(diu_mode mode, const uint8_t* message, size_t len,
                     uint64_t block_index, diu_trace_entry* out,
                     size_t out_cap, size_t* count) {
  return Guard([&] {
    diu::unified::Mode m;
    if (!ToMode(mode, &m)) return BadArgument("bad mode");
    if (!message && len > 0) return BadArgument("null message");
    const auto order = m == diu::unified::Mode::kMd5 ? diu::md5::kByteOrder
                                                     : diu::sha::kByteOrder;
    const std::span<const uint8_t> msg(message, len);
    const auto blocks =
        diu::pad_message(msg, diu::CheckedMessageBytes(len, 0) * 8,
                         diu::LengthEncodingFor(order));
    if (block_index >= blocks.size()) {
      return BadArgument(("block index " + std::to_string(block_index) +
                          " out of range; message has " +
                          std::to_string(blocks.size()) + " block(s)")
                             .c_str());
    }
    const size_t steps = static_cast<size_t>(diu::unified::StepCount(m));
    if (count) *count = steps;
    if (!out || out_cap < steps) {
      return Fail(DIU_ERR_BUFFER_TOO_SMALL, "trace buffer too small");
    }

    std::vector<uint32_t> cv;
    if (m == diu::unified::Mode::kMd5) {
      const auto iv = diu::md5::kInitialState.ToArray();
      cv.assign(iv.begin(), iv.end());
    } else {
      cv.assign(diu::sha::kSha192InitialState.begin(),
                diu::sha::kSha192InitialState.end());
    }
    diu::unified::UnifiedCore core(m);
    for (uint64_t i = 0; i < block_index; ++i) {
      core.load_block(cv, blocks[i]);
      cv = core.run_block();
    }
    core.load_block(cv, blocks[block_index]);
    for (size_t i = 0; i < steps; ++i) out[i] = ToEntry(core.step());
    return DIU_OK;
  });
}

diu_status diu_resource_report(diu_resource_row rows[3],
                               int* unified_saves_units) {
  return Guard([&] {
    if (!rows) return BadArgument("null rows");
    const auto report = diu::unified::resource_report();
    rows[0] = ToRow(report.md5_only, DIU_CONFIG_MD5_ONLY);
    rows[1] = ToRow(report.sha192_only, DIU_CONFIG_SHA192_ONLY);
    rows[2] = ToRow(report.unified, DIU_CONFIG_UNIFIED);
    if (unified_saves_units) {
      *unified_saves_units = report.UnifiedSavesUnits() ? 1 : 0;
    }
    return DIU_OK;
  });
}

diu_status diu_vectors_load_default(diu_vectors** out) {
  return Guard([&] {
    if (!out) return BadArgument("null argument");
    *out = new diu_vectors{diu::DefaultVectors()};
    return DIU_OK;
  });
}

diu_status diu_vectors_load_file(const char* path, diu_vectors** out) {
  return Guard([&] {
    if (!path || !out) return BadArgument("null argument");
    *out = new diu_vectors{diu::load_vectors(path)};
    return DIU_OK;
  });
}

diu_status diu_vectors_parse(const char* text, size_t len, diu_vectors** out) {
  return Guard([&] {
    if ((!text && len > 0) || !out) return BadArgument("null argument");
    *out = new diu_vectors{diu::ParseVectors(std::string_view(text, len))};
    return DIU_OK;
  });
}

size_t diu_vectors_count(const diu_vectors* v) {
  return v ? v->vectors.size() : 0;
}

size_t diu_vectors_count_for(const diu_vectors* v, diu_algorithm alg) {
  diu::Algorithm a;
  if (!v || !ToAlgorithm(alg, &a)) return 0;
  return static_cast<size_t>(
      std::count_if(v->vectors.begin(), v->vectors.end(),
                    [a](const diu::TestVector& t) { return t.algorithm == a; }));
}

void diu_vectors_free(diu_vectors* v) { delete v; }

diu_status diu_selftest_run(const diu_vectors* v, diu_selftest** out) {
  return Guard([&] {
    if (!v || !out) return BadArgument("null argument");
    *out = new diu_selftest{diu::run_selftest(v->vectors)};
    return DIU_OK;
  });
}

size_t diu_selftest_passed(const diu_selftest* r) {
  return r ? static_cast<size_t>(r->report.passed) : 0;
}

size_t diu_selftest_failed(const diu_selftest* r) {
  return r ? static_cast<size_t>(r->report.failed) : 0;
}

const char* diu_selftest_failure(const diu_selftest* r, size_t i) {
  if (!r || i >= r->report.failures.size()) return nullptr;
  return r->report.failures[i].c_str();
}

void diu_selftest_free(diu_selftest* r) { delete r; }

}  // extern "C"
