#ifndef QGKDIM_H
#define QGKDIM_H

/* Generated by cbindgen from qgkdim-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum QgkStatus {
  QGK_STATUS_OK = 0,
  QGK_STATUS_INVALID_ARGUMENT = 1,
  QGK_STATUS_PARSE_ERROR = 2,
  QGK_STATUS_TOO_LARGE = 3,
  QGK_STATUS_UNSUPPORTED = 4,
  QGK_STATUS_INTERNAL = 5,
} QgkStatus;

// Opaque root-system handle.
typedef struct QgkRootSystem QgkRootSystem;

// Opaque toral-weight handle.
typedef struct QgkWeight QgkWeight;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent error on this thread. Borrowed; valid until
// the next failing call on the same thread.
const char *qgk_last_error_message(void);

// Library version string (static storage).
const char *qgk_version(void);

// Build a root system from a type label such as "B2" or "A1xA1".
//
// # Safety
// `type_label` must be a valid NUL-terminated string and `out` a valid
// pointer; the returned handle must be released with `qgk_root_system_free`.
enum QgkStatus qgk_root_system_new(const char *type_label, struct QgkRootSystem **out);

// # Safety
// `ptr` must come from `qgk_root_system_new` (or be null).
void qgk_root_system_free(struct QgkRootSystem *ptr);

// # Safety
// `rs` must be a live handle.
size_t qgk_root_system_rank(const struct QgkRootSystem *rs);

// # Safety
// `rs` must be a live handle.
size_t qgk_root_system_num_positive(const struct QgkRootSystem *rs);

// Parse a weight literal ("t=1/4,c=-1;t=0,c=0" or "q^{1,0}").
//
// # Safety
// `rs` must be a live handle, `literal` a valid string, `out` a valid
// pointer; release the result with `qgk_weight_free`.
enum QgkStatus qgk_weight_parse(const struct QgkRootSystem *rs,
                                const char *literal,
                                struct QgkWeight **out);

// # Safety
// `ptr` must come from `qgk_weight_parse` (or be null).
void qgk_weight_free(struct QgkWeight *ptr);

// GK dimension of the simple highest-weight module; also reports the
// a-function value of the witness.
//
// # Safety
// `weight` must be a live handle; output pointers must be valid or null.
enum QgkStatus qgk_gk_dimension(const struct QgkWeight *weight,
                                size_t group_cap,
                                uint64_t *out_dimension,
                                uint64_t *out_a_value);

// The minimal GK-dimension constants (kappa0, kappa1, kappa2) of an
// irreducible type.
//
// # Safety
// `type_label` must be a valid string; output pointers valid or null.
enum QgkStatus qgk_kappas(const char *type_label,
                          uint64_t *out_kappa0,
                          uint64_t *out_kappa1,
                          uint64_t *out_kappa2);

// Minimal nonzero GK dimension over a field with the given torsion
// denominator (0 for unconstrained) and q-exponent denominator.
//
// # Safety
// `type_label` must be a valid string; `out` valid or null.
enum QgkStatus qgk_min_gk(const char *type_label,
                          uint32_t torsion_denominator,
                          uint32_t q_denominator,
                          uint64_t *out);

// Whether cuspidal modules can exist for the semisimple type (1 or 0).
//
// # Safety
// `type_label` must be a valid string; `out` valid or null.
enum QgkStatus qgk_cuspidal_possible(const char *type_label, uint8_t *out);

// JSON report of the integral subsystem data of a weight. The returned
// string is owned by the caller (release with `qgk_string_free`); null on
// error.
//
// # Safety
// `rs` and `weight` must be live handles.
char *qgk_subsystem_report_json(const struct QgkRootSystem *rs,
                                const struct QgkWeight *weight,
                                size_t group_cap);

// CSV of the dimension-growth experiment (columns ell, total_dim,
// exponent_estimate, J). Null on error; release with `qgk_string_free`.
//
// # Safety
// `rs` and `weight` must be live handles; `ells` must point to `ells_len`
// integers.
char *qgk_growth_csv(const struct QgkRootSystem *rs,
                     const struct QgkWeight *weight,
                     const uint64_t *ells,
                     size_t ells_len,
                     size_t height,
                     size_t group_cap);

// Release a string returned by this library.
//
// # Safety
// `ptr` must come from a qgkdim FFI call (or be null).
void qgk_string_free(char *ptr);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* QGKDIM_H */
