/*
 * Copyright 2026 The DIU Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS-IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * libdiu: data-integrity unit.
 *
 * MD5, SHA-1 and SHA-192 digests, and a functional model of a unified
 * MD5/SHA-192 datapath. Every function returns a diu_status; DIU_OK is zero.
 * On failure a description of the most recent error on the calling thread
 * is available from diu_last_error().
 *
 * Handles are opaque and owned by the caller; release each with its matching
 * _free function. A handle must not be used from two threads at once;
 * distinct handles are independent.
 */

#ifndef DIU_DIU_H_
#define DIU_DIU_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DIU_BUILDING_LIBRARY)
#    define DIU_API __declspec(dllexport)
#  else
#    define DIU_API __declspec(dllimport)
#  endif
#else
#  define DIU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum diu_status {
  DIU_OK = 0,
  DIU_ERR_INVALID_ARGUMENT = 1,
  DIU_ERR_LENGTH_OVERFLOW = 2,
  DIU_ERR_USE_AFTER_FINALIZE = 3,
  DIU_ERR_ARITY_MISMATCH = 4,
  DIU_ERR_BLOCK_EXHAUSTED = 5,
  DIU_ERR_INVALID_STATE = 6,
  DIU_ERR_PARSE = 7,
  DIU_ERR_DIGEST_LENGTH_MISMATCH = 8,
  DIU_ERR_DUPLICATE_VECTOR = 9,
  DIU_ERR_IO = 10,
  DIU_ERR_BUFFER_TOO_SMALL = 11,
  DIU_ERR_INTERNAL = 12
} diu_status;

typedef enum diu_algorithm {
  DIU_ALG_MD5 = 0,
  DIU_ALG_SHA1 = 1,
  DIU_ALG_SHA192 = 2
} diu_algorithm;

typedef enum diu_mode { DIU_MODE_MD5 = 0, DIU_MODE_SHA192 = 1 } diu_mode;

#define DIU_MAX_DIGEST_SIZE 24
#define DIU_LANES 6

DIU_API const char* diu_status_string(diu_status status);
DIU_API const char* diu_last_error(void);

/* Parses "md5", "sha1" or "sha192". */
DIU_API diu_status diu_algorithm_from_name(const char* name,
                                           diu_algorithm* out);
DIU_API const char* diu_algorithm_name(diu_algorithm alg);
/* 16, 20 or 24; zero for an unknown algorithm. */
DIU_API size_t diu_digest_size(diu_algorithm alg);

/* ---- streaming digests ------------------------------------------------ */

typedef struct diu_hash diu_hash;

/* unified != 0 routes compression through the unified datapath; SHA-1 has
 * no unified mode and is rejected with DIU_ERR_INVALID_ARGUMENT. */
DIU_API diu_status diu_hash_new(diu_algorithm alg, int unified,
                                diu_hash** out);
DIU_API diu_status diu_hash_update(diu_hash* h, const uint8_t* data,
                                   size_t len);
/* Writes the digest to out (capacity out_cap) and its length to *out_len. */
DIU_API diu_status diu_hash_final(diu_hash* h, uint8_t* out, size_t out_cap,
                                  size_t* out_len);
DIU_API void diu_hash_free(diu_hash* h);

/* One-shot digest. */
DIU_API diu_status diu_digest(diu_algorithm alg, int unified,
                              const uint8_t* data, size_t len, uint8_t* out,
                              size_t out_cap, size_t* out_len);

/* ---- unified core ----------------------------------------------------- */

typedef struct diu_trace_entry {
  uint32_t step;
  diu_mode mode;
  uint32_t regs[DIU_LANES]; /* lanes A..F; A and F read zero in MD5 mode */
} diu_trace_entry;

typedef struct diu_core diu_core;

DIU_API diu_status diu_core_new(diu_mode mode, diu_core** out);
/* cv holds 4 words (MD5) or 6 words (SHA-192); block is 64 bytes. */
DIU_API diu_status diu_core_load_block(diu_core* core, const uint32_t* cv,
                                       size_t cv_words, const uint8_t* block);
DIU_API diu_status diu_core_step(diu_core* core, diu_trace_entry* out);
/* Runs a freshly loaded block; writes the chained state to cv_out. */
DIU_API diu_status diu_core_run_block(diu_core* core, uint32_t* cv_out,
                                      size_t cv_cap, size_t* cv_words);
DIU_API void diu_core_free(diu_core* core);

/* Per-step register dump of block `block_index` of the padded message.
 * Writes up to out_cap entries (64 for MD5, 80 for SHA-192) and the count
 * to *count. An out-of-range block index is DIU_ERR_INVALID_ARGUMENT. */
DIU_API diu_status diu_trace(diu_mode mode, const uint8_t* message,
                             size_t len, uint64_t block_index,
                             diu_trace_entry* out, size_t out_cap,
                             size_t* count);

/* Number of 64-byte blocks after padding a len-byte message. */
DIU_API uint64_t diu_padded_block_count(uint64_t len);

/* ---- resource model --------------------------------------------------- */

typedef enum diu_configuration {
  DIU_CONFIG_MD5_ONLY = 0,
  DIU_CONFIG_SHA192_ONLY = 1,
  DIU_CONFIG_UNIFIED = 2
} diu_configuration;

typedef struct diu_resource_row {
  diu_configuration config;
  uint32_t modular_adders;
  uint32_t fixed_rotators;
  uint32_t variable_rotators;
  uint32_t nonlinear_units;
  uint32_t registers_32bit;
  uint32_t mode_muxes;
  uint32_t total; /* functional units; mode_muxes excluded */
} diu_resource_row;

/* Fills rows[0..2] in diu_configuration order. */
DIU_API diu_status diu_resource_report(diu_resource_row rows[3],
                                       int* unified_saves_units);

/* ---- known-answer vectors --------------------------------------------- */

typedef struct diu_vectors diu_vectors;

DIU_API diu_status diu_vectors_load_default(diu_vectors** out);
DIU_API diu_status diu_vectors_load_file(const char* path, diu_vectors** out);
DIU_API diu_status diu_vectors_parse(const char* text, size_t len,
                                     diu_vectors** out);
DIU_API size_t diu_vectors_count(const diu_vectors* v);
/* Number of vectors for one algorithm. */
DIU_API size_t diu_vectors_count_for(const diu_vectors* v, diu_algorithm alg);
DIU_API void diu_vectors_free(diu_vectors* v);

typedef struct diu_selftest diu_selftest;

DIU_API diu_status diu_selftest_run(const diu_vectors* v,
                                    diu_selftest** out);
DIU_API size_t diu_selftest_passed(const diu_selftest* r);
DIU_API size_t diu_selftest_failed(const diu_selftest* r);
/* Description of failure i (0-based), naming the vector; NULL if out of
 * range. Valid until the report is freed. */
DIU_API const char* diu_selftest_failure(const diu_selftest* r, size_t i);
DIU_API void diu_selftest_free(diu_selftest* r);

#ifdef __cplusplus
}
#endif

#endif /* DIU_DIU_H_ */
