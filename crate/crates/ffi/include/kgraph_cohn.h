#ifndef KGRAPH_COHN_H
#define KGRAPH_COHN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KgStatus {
  KG_STATUS_OK = 0,
  KG_STATUS_PARSE = 1,
  KG_STATUS_MALFORMED = 2,
  KG_STATUS_INCOMPLETE_SQUARES = 3,
  KG_STATUS_CUBE_INCONSISTENT = 4,
  KG_STATUS_NOT_COMPOSABLE = 5,
  KG_STATUS_DEGREE_OUT_OF_RANGE = 6,
  KG_STATUS_DEGREE_OVERFLOW = 7,
  KG_STATUS_HAS_SOURCES = 8,
  KG_STATUS_NOT_AT_VERTEX = 9,
  KG_STATUS_MIXED_GRAPHS = 10,
  KG_STATUS_WINDOW_TOO_SMALL = 11,
  KG_STATUS_HYPOTHESIS_FAILED = 12,
  KG_STATUS_INVALID_ARGUMENT = 13,
  KG_STATUS_JSON = 14,
  KG_STATUS_IO = 15,
  KG_STATUS_NULL_POINTER = 16,
  KG_STATUS_INVALID_UTF8 = 17,
  KG_STATUS_PANIC = 18,
} KgStatus;

/**
 * Opaque graph handle.
 */
typedef struct KgGraph KgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a `.kg` skeleton and validates it.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum KgStatus kg_graph_parse(const char *text, struct KgGraph **out);

/**
 * Builds the grid graph `Ω_{k,n}` for `n = (n[0], ..., n[k-1])`.
 *
 * # Safety
 * `n` must point to `k` readable values; `out` must be writable.
 */
enum KgStatus kg_graph_omega(uintptr_t k, const uint32_t *n, struct KgGraph **out);

/**
 * # Safety
 * `g` must come from this library and not be used afterwards.
 */
void kg_graph_free(struct KgGraph *g);

/**
 * # Safety
 * `g` must be a live handle or null (which gives 0).
 */
uintptr_t kg_graph_vertex_count(const struct KgGraph *g);

/**
 * # Safety
 * `g` must be a live handle or null (which gives 0).
 */
uintptr_t kg_graph_edge_count(const struct KgGraph *g);

/**
 * Writes the skeleton in `.kg` syntax.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KgStatus kg_graph_print(const struct KgGraph *g, char **out);

/**
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KgStatus kg_graph_dot(const struct KgGraph *g, char **out);

/**
 * Builds `TΛ`; fails with `HAS_SOURCES` when `Λ` has sources.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
enum KgStatus kg_tlambda_build(const struct KgGraph *g, struct KgGraph **out);

/**
 * `F_v` as element JSON over the ring `Z`, `Q` or `Zmod:n`.
 *
 * # Safety
 * Pointers must be valid NUL-terminated strings / a live handle; `out` writable.
 */
enum KgStatus kg_fproj_json(const struct KgGraph *g,
                            const char *ring,
                            const char *vertex,
                            char **out);

/**
 * Product of two elements in element JSON; the ring comes from `a`.
 *
 * # Safety
 * Pointers must be valid NUL-terminated strings / a live handle; `out` writable.
 */
enum KgStatus kg_mult_json(const struct KgGraph *g, const char *a, const char *b, char **out);

/**
 * Runs the property suite and returns its JSON report. A failing property
 * still returns `KG_STATUS_OK`; read `"pass"` in the report.
 *
 * # Safety
 * Pointers must be valid NUL-terminated strings / a live handle; `out` writable.
 */
enum KgStatus kg_suite_json(const struct KgGraph *g,
                            const char *ring,
                            const char *bound,
                            uint64_t seed,
                            char **out);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into this library on the same thread.
 */
const char *kg_last_error_message(void);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void kg_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* KGRAPH_COHN_H */
