#ifndef MATSHIFT_H
#define MATSHIFT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum MsStatus {
  /**
   * Success.
   */
  MsOk = 0,
  /**
   * A required pointer argument was null.
   */
  MsNullArgument = 1,
  /**
   * An input string was not valid UTF-8.
   */
  MsInvalidUtf8 = 2,
  /**
   * A JSON document failed to parse.
   */
  MsParseError = 3,
  /**
   * The input parsed but violated a structural requirement.
   */
  MsValidationError = 4,
  /**
   * The generators are not the bases of a matroid.
   */
  MsNotMatroidal = 5,
  /**
   * The ideal has no linear quotients in lexicographic order.
   */
  MsLinearQuotients = 6,
  /**
   * The ground set exceeds the homology-oracle cap.
   */
  MsOracleCap = 7,
} MsStatus;

/**
 * Opaque handle to a squarefree monomial ideal.
 */
typedef struct MsIdeal MsIdeal;

/**
 * Opaque handle to a matroid.
 */
typedef struct MsMatroid MsMatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or null when the
 * last call succeeded. The caller frees the string with `ms_string_free`.
 */
char *ms_last_error_message(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must have been returned by a function of this library and not yet
 * freed.
 */
void ms_string_free(char *s);

/**
 * Parses an ideal document `{"n":3,"generators":[[1,2],...]}` into a new
 * handle; the generating set is minimalized on ingestion.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum MsStatus ms_ideal_from_json(const char *json, struct MsIdeal **out);

/**
 * Serializes the ideal back to its JSON document.
 *
 * # Safety
 * `ideal` must be a live handle from this library.
 */
char *ms_ideal_to_json(const struct MsIdeal *ideal);

/**
 * # Safety
 * `ideal` must be a handle from this library, not yet freed; null is a
 * no-op.
 */
void ms_ideal_free(struct MsIdeal *ideal);

/**
 * Parses a matroid document: explicit bases `{"n":4,"bases":[...]}` or a
 * constructor `{"uniform":{"r":2,"n":4}}`, `{"graphic":{...}}`,
 * `{"transversal":{...}}`.
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum MsStatus ms_matroid_from_json(const char *json, struct MsMatroid **out);

/**
 * # Safety
 * `matroid` must be a live handle from this library.
 */
char *ms_matroid_to_json(const struct MsMatroid *matroid);

/**
 * # Safety
 * `matroid` must be a handle from this library, not yet freed; null is a
 * no-op.
 */
void ms_matroid_free(struct MsMatroid *matroid);

/**
 * The matroidal ideal of a matroid: one generator per basis.
 *
 * # Safety
 * `matroid` must be a live handle and `out` a valid pointer.
 */
enum MsStatus ms_matroid_ideal(const struct MsMatroid *matroid, struct MsIdeal **out);

/**
 * Tests whether the generator supports form the bases of a matroid. On
 * success writes a matroid handle to `out` (which may be null if the
 * handle is not wanted); on `MS_NOT_MATROIDAL` the exchange-property
 * witness is available from `ms_last_error_message`.
 *
 * # Safety
 * `ideal` must be a live handle; `out`, when non-null, a valid pointer.
 */
enum MsStatus ms_ideal_is_matroidal(const struct MsIdeal *ideal, struct MsMatroid **out);

/**
 * The adjacency ideal, generated by the least common multiples of
 * generator pairs at distance one (the zero ideal when none exist).
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum MsStatus ms_ideal_adjacency(const struct MsIdeal *ideal, struct MsIdeal **out);

/**
 * The `ell`-th shift ideal under the lexicographic linear-quotients
 * order; the zero ideal when `ell` exceeds the projective dimension.
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum MsStatus ms_ideal_shift(const struct MsIdeal *ideal, uint32_t ell, struct MsIdeal **out);

/**
 * The projective dimension under the lexicographic linear-quotients
 * order.
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum MsStatus ms_ideal_projdim(const struct MsIdeal *ideal, uint32_t *out);

/**
 * The multigraded Betti table as JSON
 * `{"entries":[{"i":1,"a":[1,2,3],"mult":2}]}`. With `use_oracle` the
 * table is computed by the simplicial-homology oracle instead of the
 * linear-quotients resolution; that path requires at most 14 variables.
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum MsStatus ms_ideal_betti_json(const struct MsIdeal *ideal, bool use_oracle, char **out);

/**
 * Runs the full verification (every shift ideal matroidal, shift ideals
 * equal iterated adjacency ideals) and returns the report as JSON. A
 * non-matroidal input is not an error: the report marks the checks
 * inapplicable.
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum MsStatus ms_ideal_verify_json(const struct MsIdeal *ideal, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATSHIFT_H */
