#ifndef QTOP_CAPI_H
#define QTOP_CAPI_H

/* This header is generated by cbindgen from crates/qtop-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code of every fallible call.
typedef enum QtopStatus {
  QTOP_STATUS_OK = 0,
  QTOP_STATUS_NULL_ARGUMENT = 1,
  QTOP_STATUS_INVALID_UTF8 = 2,
  QTOP_STATUS_NOT_A_TOPOLOGY = 3,
  QTOP_STATUS_NOT_A_PREORDER = 4,
  QTOP_STATUS_INVALID_PARTITION = 5,
  QTOP_STATUS_INVALID_MAP = 6,
  QTOP_STATUS_NOT_SURJECTIVE = 7,
  QTOP_STATUS_NOT_CONTINUOUS = 8,
  QTOP_STATUS_NOT_QUOTIENT = 9,
  QTOP_STATUS_SIZE_LIMIT = 10,
  QTOP_STATUS_ALPHABET_MISMATCH = 11,
  QTOP_STATUS_CARRIER_MISMATCH = 12,
  QTOP_STATUS_BASE_MISMATCH = 13,
  QTOP_STATUS_INVALID_COVER = 14,
  QTOP_STATUS_UNKNOWN_NAME = 15,
  QTOP_STATUS_INVALID_INPUT = 16,
} QtopStatus;

// Opaque handle to a finite topological space.
typedef struct QtopSpace QtopSpace;

// Separation verdicts of a finite space.
typedef struct QtopSeparation {
  bool t0;
  bool t1;
  bool hausdorff;
  bool discrete;
  bool indiscrete;
  bool h_prime;
} QtopSeparation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a newly allocated string; free with `qtop_string_free`.
char *qtop_version(void);

// Detail text of the most recent error on this thread, as a newly allocated
// string (empty if none); free with `qtop_string_free`.
char *qtop_last_error_message(void);

// Frees a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must have been returned by a function of this library and not yet
// freed.
void qtop_string_free(char *s);

// Parses a space from JSON (`{"labels": [...], "opens": [[...]]}` or
// `{"labels": [...], "upset": [[...]]}`).
//
// # Safety
// `json` must be a valid NUL-terminated string; `out` must be valid for a
// pointer write.
enum QtopStatus qtop_space_from_json(const char *json, struct QtopSpace **out);

// Builds a builtin space by name, e.g. `sierpinski` or `discrete(3)`.
//
// # Safety
// `name` must be a valid NUL-terminated string; `out` must be valid for a
// pointer write.
enum QtopStatus qtop_space_builtin(const char *name, struct QtopSpace **out);

// Frees a space handle. NULL is ignored.
//
// # Safety
// `space` must have been returned by this library and not yet freed.
void qtop_space_free(struct QtopSpace *space);

// Number of points; 0 for NULL.
//
// # Safety
// `space` must be a live handle or NULL.
size_t qtop_space_point_count(const struct QtopSpace *space);

// Serializes a space to its canonical JSON (labels plus upset matrix).
//
// # Safety
// `space` must be a live handle; `out` must be valid for a pointer write.
enum QtopStatus qtop_space_to_json(const struct QtopSpace *space, char **out);

// Separation verdicts of the space.
//
// # Safety
// `space` must be a live handle; `out` must be valid for a struct write.
enum QtopStatus qtop_space_separation(const struct QtopSpace *space, struct QtopSeparation *out);

// Full refined-route report as JSON (`size_limit` 0 means the default).
//
// # Safety
// `space` must be a live handle; `out` must be valid for a pointer write.
enum QtopStatus qtop_analyze_json(const struct QtopSpace *space,
                                  size_t level,
                                  size_t size_limit,
                                  char **out);

// Reduction-route report as JSON, interpreting the space as a
// path-component space (`size_limit` 0 means the default).
//
// # Safety
// `space` must be a live handle; `out` must be valid for a pointer write.
enum QtopStatus qtop_analyze_direct_json(const struct QtopSpace *space,
                                         size_t level,
                                         size_t size_limit,
                                         char **out);

// The reduction-topology group at one level, as JSON with carrier words,
// minimal-open basis and witnesses (`size_limit` 0 means the default).
//
// # Safety
// `space` must be a live handle; `out` must be valid for a pointer write.
enum QtopStatus qtop_fr_group_json(const struct QtopSpace *space,
                                   size_t level,
                                   size_t size_limit,
                                   char **out);

// Quotient powers of the component projection and the exchange verdict,
// as JSON (`size_limit` 0 means the default).
//
// # Safety
// `space` must be a live handle; `out` must be valid for a pointer write.
enum QtopStatus qtop_check_powers_json(const struct QtopSpace *space,
                                       size_t level,
                                       size_t size_limit,
                                       char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QTOP_CAPI_H */
