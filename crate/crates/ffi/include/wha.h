#ifndef WHA_H
#define WHA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WhaStatus {
  WHA_STATUS_OK = 0,
  /**
   * The requested check ran and did not hold.
   */
  WHA_STATUS_CHECK_FAILED = 1,
  /**
   * Bad input: unreadable file, parse error, unknown name or field.
   */
  WHA_STATUS_INPUT_ERROR = 2,
  WHA_STATUS_NULL_ARGUMENT = 3,
  /**
   * A computation could not be completed or panicked.
   */
  WHA_STATUS_INTERNAL_ERROR = 4,
} WhaStatus;

/**
 * Opaque handle to a loaded algebra.
 */
typedef struct WhaAlgebra WhaAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a catalog algebra such as `"sweedler"` or `"sum:kc2,pairgpd2"`.
 * `field` is `"Q"` or `"Fp:<p>"`; null means `"Q"`.
 *
 * # Safety
 * `name` and `field` are null or NUL-terminated; `out` is writable.
 */
enum WhaStatus wha_builtin(const char *name, const char *field, struct WhaAlgebra **out);

/**
 * Loads a `.wha.json` file.
 *
 * # Safety
 * `path` is NUL-terminated; `out` is writable.
 */
enum WhaStatus wha_load(const char *path, struct WhaAlgebra **out);

/**
 * Parses the `.wha.json` format from memory.
 *
 * # Safety
 * `json` is NUL-terminated; `out` is writable.
 */
enum WhaStatus wha_from_json(const char *json, struct WhaAlgebra **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `h` came from this library and is not used afterwards.
 */
void wha_free(struct WhaAlgebra *h);

/**
 * Dimension of the algebra, or 0 for null.
 *
 * # Safety
 * `h` is null or a live handle.
 */
size_t wha_dim(const struct WhaAlgebra *h);

/**
 * Runs every axiom suite. Returns `WHA_STATUS_CHECK_FAILED` and names the
 * failing axioms in `wha_last_error` when some do not hold.
 *
 * # Safety
 * `h` is a live handle.
 */
enum WhaStatus wha_verify(const struct WhaAlgebra *h);

/**
 * Dimensions of the left and right integral spaces.
 *
 * # Safety
 * `h` is a live handle; `left` and `right` are writable.
 */
enum WhaStatus wha_integral_dims(const struct WhaAlgebra *h, size_t *left, size_t *right);

/**
 * Writes whether left integrals are isomorphic to the source counital subalgebra.
 *
 * # Safety
 * `h` is a live handle; `out` is writable.
 */
enum WhaStatus wha_is_unimodular(const struct WhaAlgebra *h, bool *out);

/**
 * Computes the Nakayama bimodule, refusing algebras above `max_dim`, and
 * checks its invertibility and integral description. Writes its dimension
 * to `dim` when non-null.
 *
 * # Safety
 * `h` is a live handle; `dim` is null or writable.
 */
enum WhaStatus wha_nakayama(const struct WhaAlgebra *h, size_t max_dim, size_t *dim);

/**
 * Serializes to the `.wha.json` format. Free the result with `wha_string_free`.
 *
 * # Safety
 * `h` is a live handle; `out` is writable.
 */
enum WhaStatus wha_to_json(const struct WhaAlgebra *h, char **out);

/**
 * # Safety
 * `s` is null or came from this library.
 */
void wha_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *wha_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WHA_H */
