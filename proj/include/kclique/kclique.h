/*
 * Copyright 2026 The kclique Authors
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
 * C interface to the k-clique counting library.
 *
 * Objects are opaque handles created by kc_*_create / kc_*_load and released
 * with the matching kc_*_free. Every fallible call returns a kc_status; on
 * failure kc_last_error() describes the problem for the calling thread.
 * Counts are unsigned 128-bit values exposed either as decimal strings or as
 * (high, low) 64-bit halves.
 */

#ifndef KCLIQUE_KCLIQUE_H_
#define KCLIQUE_KCLIQUE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(KCLIQUE_BUILDING_LIBRARY)
#define KC_API __attribute__((visibility("default")))
#else
#define KC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kc_status {
  KC_OK = 0,
  KC_ERR_INVALID_ARGUMENT = 1, /* null handle, bad enum value, k == 0 */
  KC_ERR_PARSE = 2,            /* malformed edge-list line */
  KC_ERR_IO = 3,               /* file could not be read */
  KC_ERR_OVERFLOW = 4,         /* count exceeded 128 bits */
  KC_ERR_LIMIT = 5,            /* oracle size limit or binomial table bound */
  KC_ERR_BUFFER_TOO_SMALL = 6, /* output buffer shorter than required */
  KC_ERR_INTERNAL = 7
} kc_status;

typedef enum kc_algorithm { KC_ALGO_ORIENT = 0, KC_ALGO_PIVOT = 1, KC_ALGO_AUTO = 2 } kc_algorithm;
typedef enum kc_scheme { KC_SCHEME_VERTEX = 0, KC_SCHEME_EDGE = 1, KC_SCHEME_AUTO = 2 } kc_scheme;
typedef enum kc_criterion { KC_ORIENT_DEGREE = 0, KC_ORIENT_DEGENERACY = 1, KC_ORIENT_AUTO = 2 } kc_criterion;
typedef enum kc_oracle { KC_ORACLE_BRUTE_FORCE = 0, KC_ORACLE_RECURSIVE = 1 } kc_oracle;

typedef struct kc_graph kc_graph;
typedef struct kc_report kc_report;

typedef struct kc_config {
  kc_algorithm algorithm;
  kc_scheme scheme;
  kc_criterion criterion;
  uint32_t k;
  uint32_t workers; /* 0 selects the hardware thread count */
  int all_k;        /* non-zero: pivot pass reporting every clique size */
} kc_config;

typedef struct kc_graph_info {
  uint64_t n;
  uint64_t m;
  uint32_t d_max_undirected;
  uint64_t self_loops_dropped;
  uint64_t duplicates_dropped;
  double load_ms;
} kc_graph_info;

typedef struct kc_report_summary {
  kc_config config; /* fully resolved: no AUTO values, workers >= 1 */
  uint64_t n;
  uint64_t m;
  uint32_t d_max_undirected;
  uint32_t d_max_oriented;
  uint64_t tasks;
  double orient_ms;
  double count_ms;
  uint64_t scratch_bytes;
  uint64_t visited_total;
  uint64_t visited_min;
  uint64_t visited_max;
  double visited_mean;
  double normalized_max_load;
} kc_report_summary;

/* Message for the last failed call on this thread; never null. */
KC_API const char* kc_last_error(void);
KC_API const char* kc_status_string(kc_status status);

/* Fills cfg with AUTO choices for k and the hardware worker count. */
KC_API void kc_config_default(kc_config* cfg, uint32_t k);

KC_API kc_status kc_graph_load_file(const char* path, kc_graph** out);
KC_API kc_status kc_graph_load_text(const char* text, size_t length, kc_graph** out);
/* Raw edges (src[i], dst[i]); self-loops and duplicates are dropped. */
KC_API kc_status kc_graph_from_edges(const uint64_t* src, const uint64_t* dst, size_t count, kc_graph** out);
KC_API void kc_graph_free(kc_graph* graph);
KC_API kc_status kc_graph_get_info(const kc_graph* graph, kc_graph_info* out);
/* Maximum out-degree after orienting with the given criterion (not AUTO). */
KC_API kc_status kc_graph_oriented_dmax(const kc_graph* graph, kc_criterion criterion, uint32_t* out);

/* Replaces AUTO fields of cfg with the heuristic choice for the graph. */
KC_API kc_status kc_config_resolve(const kc_graph* graph, kc_config* cfg);

KC_API kc_status kc_count(const kc_graph* graph, const kc_config* cfg, kc_report** out);
KC_API void kc_report_free(kc_report* report);
KC_API kc_status kc_report_get_summary(const kc_report* report, kc_report_summary* out);
/* Decimal count including the terminating NUL. *needed, if non-null,
   receives the required buffer size even when the buffer is too small. */
KC_API kc_status kc_report_count_string(const kc_report* report, char* buf, size_t cap, size_t* needed);
KC_API kc_status kc_report_count_u128(const kc_report* report, uint64_t* high, uint64_t* low);
/* Per-worker visited-node counts. *count receives the worker count. */
KC_API kc_status kc_report_worker_visits(const kc_report* report, uint64_t* buf, size_t cap, size_t* count);
/* With all_k: largest clique size s for which a count is stored. */
KC_API kc_status kc_report_max_clique_size(const kc_report* report, uint32_t* out);
KC_API kc_status kc_report_count_for_size(const kc_report* report, uint32_t size, char* buf, size_t cap,
                                          size_t* needed);

/* Independent reference count, as a decimal string. */
KC_API kc_status kc_oracle_count(const kc_graph* graph, uint32_t k, kc_oracle oracle, kc_criterion criterion,
                                 char* buf, size_t cap, size_t* needed);
/* Vertex limit of the brute-force oracle. */
KC_API uint32_t kc_oracle_brute_force_limit(void);

#ifdef __cplusplus
}
#endif

#endif /* KCLIQUE_KCLIQUE_H_ */
