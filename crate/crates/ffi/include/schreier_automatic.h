/* C interface to the Schreier-graph automatic structure toolkit. */

#ifndef SCHREIER_AUTOMATIC_H
#define SCHREIER_AUTOMATIC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status of an FFI call.
 */
typedef enum SgStatus {
  /**
   * Success (and, for verifications, a passing report).
   */
  SG_OK = 0,
  /**
   * A pointer was null or a string was not valid UTF-8 / not parseable.
   */
  SG_INVALID_ARGUMENT = 1,
  /**
   * The boundary word is outside the supported family.
   */
  SG_UNSUPPORTED = 2,
  /**
   * A radius or depth exceeded a guard bound.
   */
  SG_RANGE_ERROR = 3,
  /**
   * The verification ran and found mismatches.
   */
  SG_VERIFICATION_FAILED = 4,
  /**
   * The caller-provided buffer is too small.
   */
  SG_BUFFER_TOO_SMALL = 5,
  /**
   * Any other failure; see `sg_last_error`.
   */
  SG_INTERNAL_ERROR = 6,
} SgStatus;

/**
 * Which language to verify.
 */
typedef enum SgVerifyTarget {
  SG_VERIFY_VERTICES = 0,
  SG_VERIFY_PAIRS = 1,
  SG_VERIFY_EDGES = 2,
  SG_VERIFY_ALL = 3,
} SgVerifyTarget;

/**
 * Opaque model handle.
 */
typedef struct SgModel SgModel;

/**
 * Copies the last error message of this thread into `buf` (NUL-terminated,
 * truncated to fit). A zero-length buffer is allowed and does nothing.
 *
 * # Safety
 * `buf` must point to `len` writable bytes.
 */
void sg_last_error(char *buf, size_t len);

/**
 * Creates a model for the given boundary word (e.g. `"01"`). On success
 * writes an owned handle to `out`; free it with `sg_model_free`.
 *
 * # Safety
 * `omega` must be a valid NUL-terminated string; `out` must be a valid
 * pointer.
 */
enum SgStatus sg_model_new(const char *omega, struct SgModel **out);

/**
 * Frees a handle; null is a no-op.
 *
 * # Safety
 * `model` must be null or a pointer previously returned by
 * `sg_model_new`, not freed twice.
 */
void sg_model_free(struct SgModel *model);

/**
 * Applies a generator word (e.g. `"abA"`, `"-"` for the identity) to a
 * canonical vertex encoding (`"-"` for the basepoint) and writes the image
 * encoding into `buf`, NUL-terminated.
 *
 * # Safety
 * `model` must be a live handle; `word` and `vertex` valid strings; `buf`
 * must point to `buf_len` writable bytes.
 */
enum SgStatus sg_act(const struct SgModel *model,
                     const char *word,
                     const char *vertex,
                     char *buf,
                     size_t buf_len);

/**
 * Runs acceptor-versus-oracle verification at the given depth. Returns
 * `SgOk` when every selected report passes and `SgVerificationFailed`
 * when mismatches were found.
 *
 * # Safety
 * `model` must be a live handle.
 */
enum SgStatus sg_verify(const struct SgModel *model, enum SgVerifyTarget target, uint32_t depth);

/**
 * Computes closed-ball sizes `γ(0..=radius)` around the basepoint and
 * writes them into `values`, which must hold at least `radius + 1`
 * entries. Radii above 64 are refused.
 *
 * # Safety
 * `model` must be a live handle; `values` must point to `values_len`
 * writable `uint64_t`s.
 */
enum SgStatus sg_growth(const struct SgModel *model,
                        uint32_t radius,
                        uint64_t *values,
                        size_t values_len);

#endif  /* SCHREIER_AUTOMATIC_H */
