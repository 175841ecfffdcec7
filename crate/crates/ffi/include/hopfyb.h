#ifndef HOPFYB_H
#define HOPFYB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of a call. Values match the command-line exit codes where they
 * overlap.
 */
typedef enum HopfybStatus {
  HOPFYB_STATUS_OK = 0,
  /**
   * A check failed or a mathematical precondition does not hold.
   */
  HOPFYB_STATUS_CHECK_FAILED = 1,
  /**
   * Malformed input: bad JSON, unknown name, wrong dimensions.
   */
  HOPFYB_STATUS_INVALID_INPUT = 2,
  HOPFYB_STATUS_NULL_ARGUMENT = 3,
  /**
   * A string argument is not valid UTF-8.
   */
  HOPFYB_STATUS_INVALID_UTF8 = 4,
  /**
   * The engine panicked. This is a bug.
   */
  HOPFYB_STATUS_PANIC = 5,
} HopfybStatus;

/**
 * A Hopf algebra.
 */
typedef struct HopfybAlgebra HopfybAlgebra;

/**
 * The braiding operator r built from a matched pair.
 */
typedef struct HopfybBraiding HopfybBraiding;

/**
 * A matched pair of actions on a Hopf algebra.
 */
typedef struct HopfybPair HopfybPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *hopfyb_version(void);

/**
 * Message for the last failed call on this thread, or null. The caller
 * frees the copy with `hopfyb_string_free`.
 */
char *hopfyb_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hopfyb_string_free(char *s);

/**
 * Looks up a catalog algebra: a_c2c2, h4, c2, c2c2 or s3.
 *
 * # Safety
 * `name` is a NUL-terminated string; `out` is writable.
 */
enum HopfybStatus hopfyb_algebra_catalog(const char *name, struct HopfybAlgebra **out);

/**
 * Parses a `hopf.v1` document.
 *
 * # Safety
 * `json` is a NUL-terminated string; `out` is writable.
 */
enum HopfybStatus hopfyb_algebra_from_json(const char *json, struct HopfybAlgebra **out);

/**
 * Serializes an algebra as a `hopf.v1` document.
 *
 * # Safety
 * `alg` is a live handle; `out` is writable.
 */
enum HopfybStatus hopfyb_algebra_to_json(const struct HopfybAlgebra *alg, char **out);

/**
 * Dimension of the algebra, or 0 for a null handle.
 *
 * # Safety
 * `alg` is null or a live handle.
 */
size_t hopfyb_algebra_dim(const struct HopfybAlgebra *alg);

/**
 * Checks the Hopf algebra axioms. The report is written to `report` when it
 * is non-null.
 *
 * # Safety
 * `alg` is a live handle; `report` is null or writable.
 */
enum HopfybStatus hopfyb_algebra_verify(const struct HopfybAlgebra *alg, char **report);

/**
 * Releases an algebra. Null is ignored.
 *
 * # Safety
 * `alg` must come from this library and not have been freed.
 */
void hopfyb_algebra_free(struct HopfybAlgebra *alg);

/**
 * A built-in pair: family1, family2, conjugation or trivial. `alg` is
 * required for conjugation and trivial. `alpha` is an optional scalar
 * substituted for the parameter; null keeps it symbolic.
 *
 * # Safety
 * `name` is a NUL-terminated string, `alg` null or a live handle, `alpha`
 * null or a NUL-terminated string, `out` writable.
 */
enum HopfybStatus hopfyb_pair_named(const char *name,
                                    const struct HopfybAlgebra *alg,
                                    const char *alpha,
                                    struct HopfybPair **out);

/**
 * Parses a `pair.v1` document over `alg`. A missing right action is
 * derived from the left one.
 *
 * # Safety
 * `json` is a NUL-terminated string, `alg` a live handle, `out` writable.
 */
enum HopfybStatus hopfyb_pair_from_json(const char *json,
                                        const struct HopfybAlgebra *alg,
                                        struct HopfybPair **out);

/**
 * Serializes a pair as a `pair.v1` document.
 *
 * # Safety
 * `pair` is a live handle; `out` is writable.
 */
enum HopfybStatus hopfyb_pair_to_json(const struct HopfybPair *pair, char **out);

/**
 * Checks the matched pair axioms.
 *
 * # Safety
 * `pair` is a live handle; `report` is null or writable.
 */
enum HopfybStatus hopfyb_pair_verify(const struct HopfybPair *pair, char **report);

/**
 * Evaluates the four involutivity conditions into `flags[0..4]`. Returns
 * `Ok` when the pair is involutive and `CheckFailed` otherwise.
 *
 * # Safety
 * `pair` is a live handle; `flags` points to four writable bools.
 */
enum HopfybStatus hopfyb_pair_involutivity(const struct HopfybPair *pair, bool *flags);

/**
 * Releases a pair. Null is ignored.
 *
 * # Safety
 * `pair` must come from this library and not have been freed.
 */
void hopfyb_pair_free(struct HopfybPair *pair);

/**
 * Builds r from a pair; fails with `CheckFailed` if the pair is not a
 * matched pair.
 *
 * # Safety
 * `pair` is a live handle; `out` is writable.
 */
enum HopfybStatus hopfyb_braiding_build(const struct HopfybPair *pair, struct HopfybBraiding **out);

/**
 * Checks the braiding operator axioms and the braid equation, the latter
 * at sample values of the parameter when `fast` is set.
 *
 * # Safety
 * `r` is a live handle; `report` is null or writable.
 */
enum HopfybStatus hopfyb_braiding_check(const struct HopfybBraiding *r, bool fast, char **report);

/**
 * Serializes r as an `rmatrix.v1` document.
 *
 * # Safety
 * `r` is a live handle; `out` is writable.
 */
enum HopfybStatus hopfyb_braiding_to_json(const struct HopfybBraiding *r, char **out);

/**
 * Releases a braiding operator. Null is ignored.
 *
 * # Safety
 * `r` must come from this library and not have been freed.
 */
void hopfyb_braiding_free(struct HopfybBraiding *r);

/**
 * Runs a command line exactly as the `hopfyb` binary would. `argv[0]` is
 * the program name. The exit code goes to `exit_code`; captured output goes
 * to `out` and `err` when they are non-null.
 *
 * # Safety
 * `argv` holds `argc` NUL-terminated strings; the output pointers are null
 * or writable.
 */
enum HopfybStatus hopfyb_run(int argc,
                             const char *const *argv,
                             int *exit_code,
                             char **out,
                             char **err);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFYB_H */
