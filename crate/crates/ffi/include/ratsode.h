#ifndef RATSODE_H
#define RATSODE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Return code of fallible calls.
 */
typedef enum RatsodeError {
  RATSODE_ERROR_OK = 0,
  RATSODE_ERROR_NULL_POINTER = 1,
  RATSODE_ERROR_INVALID_UTF8 = 2,
  RATSODE_ERROR_IO = 3,
  RATSODE_ERROR_PARSE = 4,
  RATSODE_ERROR_INVALID_ARGUMENT = 5,
  RATSODE_ERROR_PANIC = 6,
} RatsodeError;

/**
 * Outcome of a solve; the values match the CLI exit codes.
 */
typedef enum RatsodeStatus {
  RATSODE_STATUS_SOLVED = 0,
  RATSODE_STATUS_NO_RATIONAL_GENERAL_SOLUTION = 1,
  RATSODE_STATUS_INCONCLUSIVE = 2,
  RATSODE_STATUS_ERROR = 3,
  RATSODE_STATUS_RESOURCE_CAP = 4,
} RatsodeStatus;

typedef struct RatsodeProblem RatsodeProblem;

typedef struct RatsodeResult RatsodeResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failed call on this thread. Owned by the
 * library and valid until the next failing call on the same thread.
 */
const char *ratsode_last_error(void);

/**
 * Parses a problem from the text of a problem file.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum RatsodeError ratsode_problem_parse(const char *text, struct RatsodeProblem **out);

/**
 * Reads and parses a problem file.
 *
 * # Safety
 * `path` must be a nul-terminated string and `out` a valid pointer.
 */
enum RatsodeError ratsode_problem_load(const char *path, struct RatsodeProblem **out);

/**
 * # Safety
 * `p` must be a handle from this library or null.
 */
enum RatsodeError ratsode_problem_set_samples(struct RatsodeProblem *p, size_t samples);

/**
 * # Safety
 * `p` must be a handle from this library or null.
 */
enum RatsodeError ratsode_problem_set_seed(struct RatsodeProblem *p, uint64_t seed);

/**
 * # Safety
 * `p` must be a handle from this library or null; it is invalid afterwards.
 */
void ratsode_problem_free(struct RatsodeProblem *p);

/**
 * Runs the solver. With `verify` false the family is not checked against
 * the equation and the status is at best inconclusive.
 *
 * # Safety
 * `p` must be a handle from this library and `out` a valid pointer.
 */
enum RatsodeError ratsode_solve(const struct RatsodeProblem *p,
                                bool verify,
                                struct RatsodeResult **out);

/**
 * # Safety
 * `r` must be a handle from this library or null.
 */
enum RatsodeStatus ratsode_result_status(const struct RatsodeResult *r);

/**
 * # Safety
 * `r` must be a handle from this library or null.
 */
bool ratsode_result_verified(const struct RatsodeResult *r);

/**
 * Writes the genus consensus to `out`; false when there is none.
 *
 * # Safety
 * `r` must be a handle from this library or null, `out` valid or null.
 */
bool ratsode_result_genus(const struct RatsodeResult *r, int64_t *out);

/**
 * The family `w(z, lambda)` in input syntax, or null. Free with
 * [`ratsode_string_free`].
 *
 * # Safety
 * `r` must be a handle from this library or null.
 */
char *ratsode_result_solution(const struct RatsodeResult *r);

/**
 * The JSON report. Free with [`ratsode_string_free`].
 *
 * # Safety
 * `r` must be a handle from this library or null.
 */
char *ratsode_result_json(const struct RatsodeResult *r);

/**
 * # Safety
 * `r` must be a handle from this library or null; it is invalid afterwards.
 */
void ratsode_result_free(struct RatsodeResult *r);

/**
 * # Safety
 * `s` must be a string returned by this library or null.
 */
void ratsode_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RATSODE_H */
