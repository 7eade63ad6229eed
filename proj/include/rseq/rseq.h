/*
   Copyright 2026 The rseq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RSEQ_H
#define RSEQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RSEQ_BUILDING_LIBRARY)
#    define RSEQ_API __declspec(dllexport)
#  else
#    define RSEQ_API __declspec(dllimport)
#  endif
#else
#  define RSEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rseq_status {
  RSEQ_OK = 0,
  RSEQ_ERR_INVALID_ARGUMENT = 1,
  RSEQ_ERR_PARSE = 2,
  RSEQ_ERR_IO = 3,
  RSEQ_ERR_CAP_EXCEEDED = 4,
  RSEQ_ERR_SPACE_MISMATCH = 5,
  RSEQ_ERR_OVERFLOW = 6,
  RSEQ_ERR_INVALID_HANDLE = 7,
  RSEQ_ERR_UNKNOWN = 99
} rseq_status;

typedef enum rseq_verdict_status {
  RSEQ_HOLDS = 0,
  RSEQ_FAILS = 1,
  RSEQ_INCONCLUSIVE = 2
} rseq_verdict_status;

#define RSEQ_MAX_WITNESS 8

typedef struct rseq_verdict {
  rseq_verdict_status status;
  size_t witness_len;
  int64_t witness[RSEQ_MAX_WITNESS];
} rseq_verdict;

typedef struct rseq_window rseq_window;
typedef struct rseq_system rseq_system;

RSEQ_API const char* rseq_status_string(rseq_status status);

// Message of the last failing call on this thread; empty after success.
RSEQ_API const char* rseq_last_error(void);

// Releases strings returned through char** out-parameters.
RSEQ_API void rseq_string_free(char* s);

// ---- windows ---------------------------------------------------------------

RSEQ_API rseq_status rseq_window_create(const uint64_t* elements, size_t count, uint64_t horizon,
                                        rseq_window** out);
RSEQ_API rseq_status rseq_window_load(const char* path, rseq_window** out);
// name: naturals | evens | odds | squares | cubes
RSEQ_API rseq_status rseq_window_builtin(const char* name, uint64_t horizon, rseq_window** out);
RSEQ_API rseq_status rseq_window_random(uint64_t seed, uint64_t horizon, double density,
                                        rseq_window** out);
// Keeps elements <= horizon and observes the window up to horizon.
RSEQ_API rseq_status rseq_window_truncate(const rseq_window* w, uint64_t horizon,
                                          rseq_window** out);
RSEQ_API rseq_status rseq_window_save(const rseq_window* w, const char* path, const char* comment);
RSEQ_API rseq_status rseq_window_info(const rseq_window* w, uint64_t* horizon, size_t* count);
RSEQ_API rseq_status rseq_window_elements(const rseq_window* w, uint64_t* buffer, size_t capacity,
                                          size_t* written);
RSEQ_API void rseq_window_destroy(rseq_window* w);

RSEQ_API rseq_status rseq_is_syndetic(const rseq_window* w, uint64_t gap_bound, rseq_verdict* out);
RSEQ_API rseq_status rseq_is_thick(const rseq_window* w, uint64_t run_length, rseq_verdict* out);
RSEQ_API rseq_status rseq_pws_certificate(const rseq_window* w, uint64_t gap_bound,
                                          uint64_t block_length, rseq_verdict* out);
RSEQ_API rseq_status rseq_banach_density(const rseq_window* w, uint64_t interval_length,
                                         uint64_t* num, uint64_t* den);
RSEQ_API rseq_status rseq_r_sequence_cyclic(const rseq_window* w, uint64_t max_period,
                                            rseq_verdict* out);

// ---- systems ---------------------------------------------------------------

RSEQ_API rseq_status rseq_system_parse(const char* spec, rseq_system** out);
RSEQ_API rseq_status rseq_system_spec(const rseq_system* sys, char** out);
RSEQ_API rseq_status rseq_is_totally_minimal(const rseq_system* sys, rseq_verdict* out);
RSEQ_API void rseq_system_destroy(rseq_system* sys);

// ---- JSON reports ------------------------------------------------------------
//
// Every report is a JSON object with sorted keys. `config_json` is the
// caller's run configuration (may be NULL); it is embedded verbatim under
// "config" and its numeric fields supply the operation parameters:
// gap, run, block, density_length, eps, grid, max_period, shifts ("a..b"),
// cap, seed, count, horizon, density_min, density_max, test.

RSEQ_API rseq_status rseq_report_classify(const rseq_window* w, const char* source,
                                          const char* config_json, char** out);
// family: "cyclic:<=M" or a system spec.
RSEQ_API rseq_status rseq_report_recurrence(const rseq_window* w, const char* source,
                                            const char* family, const char* config_json,
                                            char** out);
RSEQ_API rseq_status rseq_report_permpoly_check(const char* poly, uint64_t p,
                                                const char* config_json, char** out);
RSEQ_API rseq_status rseq_report_find_prime(const char* poly, uint64_t cap,
                                            const char* config_json, char** out);
// schedule_json may be NULL for the standard schedule. *out_window receives
// the constructed sequence when out_window is not NULL.
RSEQ_API rseq_status rseq_report_construct(const char* schedule_json, uint64_t blocks,
                                           const char* config_json, rseq_window** out_window,
                                           char** out);
RSEQ_API rseq_status rseq_report_product(const char* left_spec, const char* right_spec,
                                         const char* config_json, char** out);
// w may be NULL: then `count` seeded random windows are generated.
RSEQ_API rseq_status rseq_report_crosscheck(const rseq_window* w, const char* source,
                                            const char* config_json, char** out);

#ifdef __cplusplus
}
#endif

#endif  // RSEQ_H
