#ifndef PENCIL_STRATA_H
#define PENCIL_STRATA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result of every call.
 */
typedef enum PsStatus {
  PS_STATUS_OK = 0,
  PS_STATUS_NULL_POINTER = 1,
  PS_STATUS_INVALID_UTF8 = 2,
  PS_STATUS_MALFORMED_INPUT = 3,
  PS_STATUS_PRECONDITION = 4,
  PS_STATUS_DIMENSION_MISMATCH = 5,
  PS_STATUS_PANIC = 6,
} PsStatus;

/**
 * Opaque handle to an exact pencil `A + λB`.
 */
typedef struct PsPencil PsPencil;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *ps_last_error_message(void);

/**
 * Parses `{"m","n","A","B"}` JSON into a new handle.
 *
 * # Safety
 * `json` must be null or a NUL-terminated string; `out` must be null or
 * valid for a pointer write.
 */
enum PsStatus ps_pencil_from_json(const char *json, struct PsPencil **out);

/**
 * Serializes a pencil to JSON.
 *
 * # Safety
 * `p` must be null or a live handle; `out` must be null or writable.
 */
enum PsStatus ps_pencil_to_json(const struct PsPencil *p, char **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `p` must be null or a handle obtained from this library, not yet freed.
 */
void ps_pencil_free(struct PsPencil *p);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, not yet freed.
 */
void ps_string_free(char *s);

/**
 * # Safety
 * `p` must be null or a live handle; `m` and `n` must be null or writable.
 */
enum PsStatus ps_pencil_dims(const struct PsPencil *p, size_t *m, size_t *n);

/**
 * # Safety
 * `p` must be null or a live handle; `out` must be null or writable.
 */
enum PsStatus ps_pencil_normal_rank(const struct PsPencil *p, size_t *out);

/**
 * Kronecker structure as JSON.
 *
 * # Safety
 * `p` must be null or a live handle; `out` must be null or writable.
 */
enum PsStatus ps_pencil_classify_json(const struct PsPencil *p, char **out);

/**
 * Whether Q lies in the orbit closure of P. When `witness_json` is not
 * null it receives the verdict as JSON, including the failing condition.
 *
 * # Safety
 * `p`, `q` must be null or live handles; `included` must be null or
 * writable; `witness_json` may be null.
 */
enum PsStatus ps_closure_includes(const struct PsPencil *p,
                                  const struct PsPencil *q,
                                  bool *included,
                                  char **witness_json);

/**
 * The generic pencil `K_a` of the component (m, n, r, a).
 *
 * # Safety
 * `out` must be null or writable.
 */
enum PsStatus ps_generic_pencil(size_t m, size_t n, size_t r, size_t a, struct PsPencil **out);

/**
 * # Safety
 * `q` must be null or a live handle; `out` must be null or writable.
 */
enum PsStatus ps_component_member(const struct PsPencil *q,
                                  size_t m,
                                  size_t n,
                                  size_t r,
                                  size_t a,
                                  bool *out);

/**
 * All `a` with Q in `C_a^r`, as a JSON array.
 *
 * # Safety
 * `q` must be null or a live handle; `out` must be null or writable.
 */
enum PsStatus ps_components_of_json(const struct PsPencil *q, size_t r, char **out);

/**
 * # Safety
 * `out` must be null or writable.
 */
enum PsStatus ps_dimension(size_t m, size_t n, size_t r, size_t a, size_t *out);

/**
 * # Safety
 * `out` must be null or writable.
 */
enum PsStatus ps_verify_dimension(size_t m,
                                  size_t n,
                                  size_t r,
                                  size_t a,
                                  size_t trials,
                                  uint64_t seed,
                                  bool *out);

/**
 * Witness decomposition of a canonical form given as
 * `{"blocks": [...], "E": ..., "F": ...}` JSON.
 *
 * # Safety
 * `form_json` must be null or NUL-terminated; `out` must be null or
 * writable.
 */
enum PsStatus ps_witness_decomposition_json(const char *form_json,
                                            size_t m,
                                            size_t n,
                                            size_t r,
                                            size_t a,
                                            char **out);

/**
 * Random member of the component. `decomposition_json` may be null.
 *
 * # Safety
 * `out_pencil` must be null or writable; `decomposition_json` may be null.
 */
enum PsStatus ps_sample_component(size_t m,
                                  size_t n,
                                  size_t r,
                                  size_t a,
                                  uint64_t seed,
                                  uint64_t height,
                                  struct PsPencil **out_pencil,
                                  char **decomposition_json);

/**
 * Perturbs the constant parts of an m×n decomposition by at most
 * `eps_num / eps_den` so that it reaches full normal rank.
 *
 * # Safety
 * `decomposition_json` must be null or NUL-terminated; `out` must be null
 * or writable.
 */
enum PsStatus ps_perturb_to_full_rank_json(const char *decomposition_json,
                                           size_t m,
                                           size_t n,
                                           int64_t eps_num,
                                           int64_t eps_den,
                                           uint64_t seed,
                                           char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PENCIL_STRATA_H */
