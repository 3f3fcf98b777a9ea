/* Copyright 2026 The scx Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libscx: shortest d-paths in weighted simplicial complexes.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function (passing NULL is allowed). Every fallible call
 * returns an scx_status; on failure a message describing the most recent
 * error on the calling thread is available from scx_last_error().
 *
 * Simplices are passed as arrays of 1-based vertex ids in any order.
 * Handles are immutable once created and may be shared across threads.
 */

#ifndef SCX_SCX_H
#define SCX_SCX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SCX_BUILDING_LIBRARY)
#    define SCX_API __declspec(dllexport)
#  else
#    define SCX_API __declspec(dllimport)
#  endif
#else
#  define SCX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scx_status {
  SCX_OK = 0,
  SCX_ERR_INVALID_ARGUMENT = 1, /* NULL pointer, index out of range, ... */
  SCX_ERR_INVALID_SIMPLEX = 2,
  SCX_ERR_INVALID_COMPLEX = 3,
  SCX_ERR_INVALID_WEIGHTS = 4,
  SCX_ERR_CONFIG = 5,
  SCX_ERR_PARSE = 6,
  SCX_ERR_IO = 7,
  SCX_ERR_BUFFER_TOO_SMALL = 8,
  SCX_ERR_INTERNAL = 99
} scx_status;

typedef struct scx_complex scx_complex;
typedef struct scx_distance_map scx_distance_map;
typedef struct scx_path scx_path;
typedef struct scx_report scx_report;

typedef struct scx_generator_config {
  uint32_t n;
  uint32_t d;
  double p;
  double weight_low;
  double weight_high;
  int integer_weights;
  uint64_t seed;
} scx_generator_config;

SCX_API const char* scx_version(void);
SCX_API const char* scx_status_string(scx_status status);
/* Message for the last failure on this thread; "" if none. For
 * SCX_ERR_PARSE the line number is reported separately. */
SCX_API const char* scx_last_error(void);
/* Line of the last SCX_ERR_PARSE on this thread, 0 otherwise. */
SCX_API size_t scx_last_error_line(void);

/* ---- complexes ---- */

/* `vertices` holds top_count * (d+1) ids, one simplex after another. */
SCX_API scx_status scx_complex_create(uint32_t d, uint32_t n, const uint32_t* vertices,
                                      const double* weights, size_t top_count,
                                      scx_complex** out);
SCX_API scx_status scx_complex_parse(const char* text, size_t length, scx_complex** out);
SCX_API scx_status scx_complex_load(const char* path, scx_complex** out);
SCX_API scx_status scx_complex_generate(const scx_generator_config* config,
                                        scx_complex** out);
SCX_API void scx_complex_free(scx_complex* complex);

SCX_API uint32_t scx_complex_dim(const scx_complex* complex);
SCX_API uint32_t scx_complex_vertex_count(const scx_complex* complex);
SCX_API size_t scx_complex_top_count(const scx_complex* complex);
/* Number of (d-1)-simplices contained in at least one top simplex. */
SCX_API size_t scx_complex_facet_count(const scx_complex* complex);
/* Top simplices in lexicographic order; `vertices` receives d+1 ids. */
SCX_API scx_status scx_complex_top(const scx_complex* complex, size_t index,
                                   uint32_t* vertices, double* weight);
/* Heap-allocated canonical .scx text; release with scx_string_free. */
SCX_API scx_status scx_complex_serialize(const scx_complex* complex, char** text,
                                         size_t* length);
SCX_API scx_status scx_complex_save(const scx_complex* complex, const char* path);
SCX_API int scx_complex_equal(const scx_complex* a, const scx_complex* b);
SCX_API void scx_string_free(char* text);

SCX_API scx_status scx_complex_degree(const scx_complex* complex, const uint32_t* sigma,
                                      size_t sigma_size, size_t* degree);
/*
 * Neighbors of sigma sorted by neighbor. Always d * degree records. Each
 * record fills d ids in `neighbors`, d+1 ids in `via` and one weight. Call
 * with capacity 0 to learn the count; SCX_ERR_BUFFER_TOO_SMALL if capacity
 * is short (count is still written).
 */
SCX_API scx_status scx_complex_neighbors(const scx_complex* complex, const uint32_t* sigma,
                                         size_t sigma_size, uint32_t* neighbors,
                                         uint32_t* via, double* weights, size_t capacity,
                                         size_t* count);

/* ---- validation ---- */

typedef enum scx_violation_kind {
  SCX_VIOLATION_INVALID_HEADER = 0,
  SCX_VIOLATION_MALFORMED_SIMPLEX = 1,
  SCX_VIOLATION_VERTEX_OUT_OF_RANGE = 2,
  SCX_VIOLATION_DUPLICATE_SIMPLEX = 3,
  SCX_VIOLATION_NON_FINITE_WEIGHT = 4,
  SCX_VIOLATION_NEGATIVE_WEIGHT = 5,
  SCX_VIOLATION_NON_POSITIVE_WEIGHT = 6
} scx_violation_kind;

SCX_API scx_status scx_complex_validate(const scx_complex* complex, int strict_positive,
                                        scx_report** out);
/* Validates raw input without building a complex; reports malformed rows. */
SCX_API scx_status scx_validate_raw(int32_t d, uint32_t n, const uint32_t* vertices,
                                    const size_t* sizes, const double* weights,
                                    size_t top_count, int strict_positive,
                                    scx_report** out);
SCX_API size_t scx_report_count(const scx_report* report);
SCX_API scx_violation_kind scx_report_kind(const scx_report* report, size_t index);
SCX_API const char* scx_report_kind_name(const scx_report* report, size_t index);
SCX_API const char* scx_report_message(const scx_report* report, size_t index);
SCX_API void scx_report_free(scx_report* report);

/* ---- shortest paths ---- */

SCX_API scx_status scx_sssp(const scx_complex* complex, const uint32_t* source,
                            size_t source_size, scx_distance_map** out);
/* Reachable simplices only, in the order the search finalized them. */
SCX_API size_t scx_distance_map_size(const scx_distance_map* map);
/*
 * Entry `index`: simplex (d ids), distance, and, when *has_predecessor is
 * set, the predecessor (d ids) and connecting top simplex (d+1 ids).
 * Any output pointer may be NULL.
 */
SCX_API scx_status scx_distance_map_entry(const scx_distance_map* map, size_t index,
                                          uint32_t* simplex, double* distance,
                                          int* has_predecessor, uint32_t* predecessor,
                                          uint32_t* via);
/* INFINITY for unreachable simplices. */
SCX_API double scx_distance_map_lookup(const scx_distance_map* map, const uint32_t* sigma,
                                       size_t sigma_size);
SCX_API void scx_distance_map_free(scx_distance_map* map);

/* *out is set to NULL (with SCX_OK) when target is unreachable. */
SCX_API scx_status scx_shortest_path(const scx_complex* complex, const uint32_t* source,
                                     const uint32_t* target, size_t simplex_size,
                                     scx_path** out);
/* Number of steps l; the path holds l+1 simplices and l top simplices. */
SCX_API size_t scx_path_length(const scx_path* path);
SCX_API double scx_path_total(const scx_path* path);
SCX_API scx_status scx_path_simplex(const scx_path* path, size_t index, uint32_t* simplex);
SCX_API scx_status scx_path_via(const scx_path* path, size_t index, uint32_t* via);
SCX_API void scx_path_free(scx_path* path);

/*
 * `simplices` holds count * d ids. *valid is 1 for a d-path; otherwise, if
 * `diagnostic` is non-NULL, it receives a heap string naming the first
 * violated condition (release with scx_string_free).
 */
SCX_API scx_status scx_is_d_path(const scx_complex* complex, const uint32_t* simplices,
                                 size_t count, int* valid, char** diagnostic);

#ifdef __cplusplus
}
#endif

#endif /* SCX_SCX_H */
