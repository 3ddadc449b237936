#ifndef CONTEXTUALITY_LAB_H
#define CONTEXTUALITY_LAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ClabStatus {
  CLAB_STATUS_OK = 0,
  CLAB_STATUS_NULL_POINTER = 1,
  CLAB_STATUS_INVALID_UTF8 = 2,
  CLAB_STATUS_PARSE = 3,
  CLAB_STATUS_INVALID_ARGUMENT = 4,
  CLAB_STATUS_MIXED_MODE = 5,
  /**
   * `clab_verify` ran but at least one check failed.
   */
  CLAB_STATUS_CHECKS_FAILED = 6,
  CLAB_STATUS_PANIC = 7,
} ClabStatus;

typedef enum ClabMode {
  CLAB_MODE_EXACT = 0,
  CLAB_MODE_APPROX = 1,
} ClabMode;

/**
 * Opaque multivector handle.
 */
typedef struct ClabMultivector ClabMultivector;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *clab_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *clab_version(void);

/**
 * Parses a signed blade sum such as `1 + 2·e12 − e123`.
 *
 * # Safety
 * `text` must be NUL-terminated; `out` must be writable.
 */
enum ClabStatus clab_multivector_parse(const char *text,
                                       enum ClabMode mode,
                                       struct ClabMultivector **out);

/**
 * The basis vector `e_axis`, axis 1..=3.
 *
 * # Safety
 * `out` must be writable.
 */
enum ClabStatus clab_multivector_basis(size_t axis,
                                       enum ClabMode mode,
                                       struct ClabMultivector **out);

/**
 * Geometric product `a·b`. Both operands must share a mode.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum ClabStatus clab_multivector_product(const struct ClabMultivector *a,
                                         const struct ClabMultivector *b,
                                         struct ClabMultivector **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum ClabStatus clab_multivector_add(const struct ClabMultivector *a,
                                     const struct ClabMultivector *b,
                                     struct ClabMultivector **out);

/**
 * Coefficientwise comparison; `tolerance` is ignored in exact mode.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum ClabStatus clab_multivector_equals(const struct ClabMultivector *a,
                                        const struct ClabMultivector *b,
                                        double tolerance,
                                        bool *out);

/**
 * Grade-0 part as a double (exact values are rounded).
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum ClabStatus clab_multivector_scalar_part(const struct ClabMultivector *a, double *out);

/**
 * Renders `a` as a signed blade sum. Release with `clab_string_free`.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum ClabStatus clab_multivector_render(const struct ClabMultivector *a, char **out);

/**
 * Releases a handle. NULL is a no-op.
 *
 * # Safety
 * `mv` must come from this library and not be used afterwards.
 */
void clab_multivector_free(struct ClabMultivector *mv);

/**
 * Releases a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void clab_string_free(char *s);

/**
 * Runs a verification suite (`pm`, `ghz`, `bell-ghz`, `operators`, `states`,
 * `a3`, `algebra`, `multi-system`, `chsh` or `all`) and writes its JSON
 * report to `out_json`. Returns `CLAB_STATUS_CHECKS_FAILED` when the report
 * contains a failing check; the report is written either way.
 *
 * # Safety
 * `target` must be NUL-terminated; `out_json` must be writable.
 */
enum ClabStatus clab_verify(const char *target, enum ClabMode mode, uint64_t seed, char **out_json);

/**
 * `F(φ)` for `φ` in `[0, π]`.
 *
 * # Safety
 * `out` must be writable.
 */
enum ClabStatus clab_chsh_f(double phi, double *out);

/**
 * Identity maps whose Bell-GHZ column reads `(x, x, x, −x)` for the signed
 * in-plane generator `target` (e.g. `"-e2"`), as a JSON array.
 *
 * # Safety
 * `target` must be NUL-terminated; `out_json` must be writable.
 */
enum ClabStatus clab_search_identities(const char *target, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONTEXTUALITY_LAB_H */
