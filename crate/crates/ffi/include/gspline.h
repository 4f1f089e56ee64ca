#ifndef GSPLINE_H
#define GSPLINE_H

/* Generated with cbindgen:0.29.4 */

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every entry point.
 */
typedef enum GsplineStatus {
  GSPLINE_STATUS_OK = 0,
  /**
   * The question had a negative answer (not a spline, not a basis).
   */
  GSPLINE_STATUS_NEGATIVE = 1,
  GSPLINE_STATUS_NULL_ARGUMENT = 2,
  GSPLINE_STATUS_INVALID_UTF8 = 3,
  /**
   * Malformed document, unknown vertex, bad selection and the like.
   */
  GSPLINE_STATUS_INVALID_INPUT = 4,
  /**
   * The operation is not available for this coefficient domain.
   */
  GSPLINE_STATUS_UNSUPPORTED = 5,
  /**
   * A computation bound was hit or an internal check failed.
   */
  GSPLINE_STATUS_FAILED = 6,
  GSPLINE_STATUS_PANIC = 7,
} GsplineStatus;

/**
 * Opaque graph handle.
 */
typedef struct GsplineGraph GsplineGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string.
 */
const char *gspline_version(void);

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next gspline call on the same thread.
 */
const char *gspline_last_error(void);

/**
 * Parses a graph document. On success `*out` owns a handle to release with
 * `gspline_graph_free`.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum GsplineStatus gspline_graph_from_json(const char *json, struct GsplineGraph **out);

/**
 * # Safety
 * `graph` must be null or a handle from `gspline_graph_from_json` that has
 * not been freed.
 */
void gspline_graph_free(struct GsplineGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum GsplineStatus gspline_graph_vertex_count(const struct GsplineGraph *graph, size_t *out);

/**
 * Caps trail enumeration for later calls on this handle.
 *
 * # Safety
 * `graph` must be a live handle.
 */
enum GsplineStatus gspline_graph_set_trail_limit(struct GsplineGraph *graph, size_t limit);

/**
 * Checks a spline document (`{"values": [...]}`). Returns `Ok` for a
 * spline and `Negative` otherwise.
 *
 * # Safety
 * `graph` must be a live handle and `values_json` a nul-terminated string.
 */
enum GsplineStatus gspline_is_spline(const struct GsplineGraph *graph, const char *values_json);

/**
 * Writes `{"domain", "vertex_lcms", "q_g"}` to `*out`.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum GsplineStatus gspline_invariants(const struct GsplineGraph *graph, char **out);

/**
 * Minimal selections of an interior vertex as JSON. With `complete` set
 * they are taken on the completed graph, which is what
 * `gspline_construct` numbers.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum GsplineStatus gspline_selections(const struct GsplineGraph *graph,
                                      size_t vertex,
                                      bool complete,
                                      char **out);

/**
 * Constructed spline for `vertex` as a spline document. `selection` is the
 * 1-based id of a minimal selection of the completion, or 0 for the first
 * and last vertex.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum GsplineStatus gspline_construct(const struct GsplineGraph *graph,
                                     size_t vertex,
                                     size_t selection,
                                     char **out);

/**
 * Basis criterion for a JSON array of spline documents. The report
 * `{"determinant", "q_g", "quotient", "is_basis"}` is written to `*out`;
 * the status is `Ok` for a basis and `Negative` otherwise.
 *
 * # Safety
 * `graph` must be a live handle, `splines_json` a nul-terminated string and
 * `out` a valid pointer.
 */
enum GsplineStatus gspline_check_basis(const struct GsplineGraph *graph,
                                       const char *splines_json,
                                       char **out);

/**
 * Integer flow-up basis as `{"diagonal", "splines"}`. Integer graphs only.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum GsplineStatus gspline_flowup(const struct GsplineGraph *graph, char **out);

/**
 * Releases a string returned through an out-pointer.
 *
 * # Safety
 * `s` must be null or a string produced by this library, freed once.
 */
void gspline_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GSPLINE_H */
