#ifndef TESSPEC_H
#define TESSPEC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Boundary condition selector.
 */
typedef enum {
  TESSPEC_BOUNDARY_ABSOLUTE = 0,
  TESSPEC_BOUNDARY_RELATIVE = 1,
} TesspecBoundary;

/**
 * Eta invariant selector.
 */
typedef enum {
  TESSPEC_ETA_KIND_SIGNATURE = 0,
  TESSPEC_ETA_KIND_DIRAC = 1,
} TesspecEtaKind;

/**
 * Result codes.
 */
typedef enum {
  TESSPEC_STATUS_OK = 0,
  TESSPEC_STATUS_NULL_POINTER = 1,
  TESSPEC_STATUS_INVALID_UTF8 = 2,
  TESSPEC_STATUS_INVALID_ARGUMENT = 3,
  TESSPEC_STATUS_UNKNOWN_GROUP = 4,
  TESSPEC_STATUS_RANK_ERROR = 5,
  TESSPEC_STATUS_DOMAIN_ERROR = 6,
  TESSPEC_STATUS_PRECISION_ERROR = 7,
  TESSPEC_STATUS_COMPUTATION_FAILED = 8,
  TESSPEC_STATUS_IO = 9,
  TESSPEC_STATUS_PANIC = 10,
} TesspecStatus;

/**
 * Opaque group handle.
 */
typedef struct TesspecGroup TesspecGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *tesspec_version(void);

/**
 * Message for the last failed call on this thread, or null. Free with
 * `tesspec_string_free`.
 */
char *tesspec_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void tesspec_string_free(char *s);

/**
 * Looks up a catalog group by name ("3-3-3", "hemisphere-5", ...).
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a valid pointer.
 */
TesspecStatus tesspec_group_new(const char *name, TesspecGroup **out);

/**
 * Builds a degree-driven group from `len` reduced degrees.
 *
 * # Safety
 * `degrees` must point to `len` readable values and `out` be valid.
 */
TesspecStatus tesspec_group_custom(const uint32_t *degrees, uintptr_t len, TesspecGroup **out);

/**
 * Releases a group handle. Null is ignored.
 *
 * # Safety
 * `g` must come from `tesspec_group_new` or `tesspec_group_custom`.
 */
void tesspec_group_free(TesspecGroup *g);

/**
 * Sphere dimension d of the group, 0 for a null handle.
 *
 * # Safety
 * `g` must be a live handle or null.
 */
uint32_t tesspec_group_dimension(const TesspecGroup *g);

/**
 * Group order as a decimal string.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
TesspecStatus tesspec_group_order(const TesspecGroup *g, char **out);

/**
 * Display label of the group.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
TesspecStatus tesspec_group_label(const TesspecGroup *g, char **out);

/**
 * Coexact zeta value at `s` (a rational string such as "0", "-1", "-1/2").
 * At middle rank of odd d the boundary condition is ignored.
 *
 * # Safety
 * Pointers must be valid; `s` nul-terminated.
 */
TesspecStatus tesspec_zeta(const TesspecGroup *g,
                           uint32_t p,
                           TesspecBoundary bc,
                           const char *s,
                           char **out);

/**
 * Middle-rank Casimir energy.
 *
 * # Safety
 * Pointers must be valid.
 */
TesspecStatus tesspec_casimir(const TesspecGroup *g, uint32_t p, char **out);

/**
 * Heat-kernel coefficients as a JSON array of {k, coefficient, sqrt_pi}.
 *
 * # Safety
 * Pointers must be valid.
 */
TesspecStatus tesspec_heat_coefficients_json(const TesspecGroup *g,
                                             uint32_t p,
                                             TesspecBoundary bc,
                                             char **out);

/**
 * Degeneracies at levels 0..=lmax as a JSON array of rational strings.
 *
 * # Safety
 * Pointers must be valid.
 */
TesspecStatus tesspec_degeneracies_json(const TesspecGroup *g,
                                        uint32_t p,
                                        TesspecBoundary bc,
                                        uint32_t lmax,
                                        char **out);

/**
 * Counting function N(λ) with the half-weight convention at eigenvalues.
 *
 * # Safety
 * Pointers must be valid; `lambda` nul-terminated.
 */
TesspecStatus tesspec_counting(const TesspecGroup *g,
                               uint32_t p,
                               TesspecBoundary bc,
                               const char *lambda,
                               char **out);

/**
 * Exact Weyl constant of the counting function, as a rational string.
 *
 * # Safety
 * Pointers must be valid.
 */
TesspecStatus tesspec_weyl_constant(const TesspecGroup *g, uint32_t p, char **out);

/**
 * Eta invariant as JSON. `cache` may be null to use $TESSPEC_CACHE_DIR.
 *
 * # Safety
 * Pointers must be valid; `cache` null or nul-terminated.
 */
TesspecStatus tesspec_eta_json(const TesspecGroup *g,
                               TesspecEtaKind kind,
                               uint32_t digits,
                               const char *cache,
                               char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TESSPEC_H */
