#ifndef BINOMIALS_H
#define BINOMIALS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The first three match the command-line exit codes.
 */
typedef enum BnStatus {
  BN_STATUS_OK = 0,
  /**
   * The request is well formed but its mathematical precondition fails.
   */
  BN_STATUS_REFUSED = 1,
  BN_STATUS_INPUT_ERROR = 2,
  BN_STATUS_NULL_POINTER = 3,
  BN_STATUS_INVALID_UTF8 = 4,
  /**
   * An internal failure; the library state is still usable.
   */
  BN_STATUS_PANIC = 5,
} BnStatus;

/**
 * Opaque ideal handle.
 */
typedef struct BnIdeal BnIdeal;

/**
 * Opaque list of ideals.
 */
typedef struct BnIdealList BnIdealList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The
 * pointer stays valid until the next call into the library on this
 * thread.
 */
const char *bn_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *bn_version(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void bn_string_free(char *s);

/**
 * Parses an input document (`ring`, `ideal`, generator lines) and returns
 * the ideal called `name`, or the first one when `name` is NULL.
 *
 * # Safety
 * `text` and a non-NULL `name` must be NUL-terminated; `out` must be
 * writable.
 */
enum BnStatus bn_ideal_parse(const char *text, const char *name, struct BnIdeal **out);

/**
 * Toric ideal of a row-major `rows × cols` matrix, in variables
 * `x1, …, x<cols>`.
 *
 * # Safety
 * `entries` must hold `rows * cols` values; `out` must be writable.
 */
enum BnStatus bn_toric_ideal(const int64_t *entries,
                             size_t rows,
                             size_t cols,
                             struct BnIdeal **out);

/**
 * Releases an ideal. NULL is ignored.
 *
 * # Safety
 * `ideal` must come from this library and not have been freed.
 */
void bn_ideal_free(struct BnIdeal *ideal);

/**
 * Number of ring variables, or 0 for NULL.
 *
 * # Safety
 * `ideal` must be NULL or a live handle.
 */
size_t bn_ideal_nvars(const struct BnIdeal *ideal);

/**
 * Reduced Gröbner basis, one generator per line. `order` is `lex`,
 * `grevlex`, `elim:X,Y`, or NULL for grevlex.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum BnStatus bn_ideal_groebner_basis(const struct BnIdeal *ideal, const char *order, char **out);

/**
 * The ideal as `<g1, g2, …>` with its original generators.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum BnStatus bn_ideal_to_string(const struct BnIdeal *ideal, char **out);

/**
 * Ideal equality.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum BnStatus bn_ideal_equal(const struct BnIdeal *a, const struct BnIdeal *b, bool *out);

/**
 * Whether `a ⊇ b`.
 *
 * # Safety
 * Both handles must be live; `out` must be writable.
 */
enum BnStatus bn_ideal_contains(const struct BnIdeal *a, const struct BnIdeal *b, bool *out);

/**
 * Binomial primality.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum BnStatus bn_ideal_is_prime(const struct BnIdeal *ideal, bool *out);

/**
 * Whether every variable is a nonzerodivisor or nilpotent.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum BnStatus bn_ideal_is_cellular(const struct BnIdeal *ideal, bool *out);

/**
 * Mesoprimary test. When the answer is false and `witness` is non-NULL,
 * the witness monomial is written there; otherwise `*witness` is NULL.
 *
 * # Safety
 * `ideal` must be a live handle; `out` and a non-NULL `witness` must be
 * writable.
 */
enum BnStatus bn_ideal_is_mesoprimary(const struct BnIdeal *ideal, bool *out, char **witness);

/**
 * Cellular decomposition into a new list.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum BnStatus bn_ideal_cellular_decompose(const struct BnIdeal *ideal, struct BnIdealList **out);

/**
 * Number of ideals in a list, or 0 for NULL.
 *
 * # Safety
 * `list` must be NULL or a live list.
 */
size_t bn_ideal_list_len(const struct BnIdealList *list);

/**
 * Borrowed pointer to the `index`-th ideal, or NULL when out of range.
 * It is valid while the list is alive and must not be freed.
 *
 * # Safety
 * `list` must be NULL or a live list.
 */
const struct BnIdeal *bn_ideal_list_get(const struct BnIdealList *list, size_t index);

/**
 * Releases a list and every ideal in it. NULL is ignored.
 *
 * # Safety
 * `list` must come from this library and not have been freed.
 */
void bn_ideal_list_free(struct BnIdealList *list);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* BINOMIALS_H */
