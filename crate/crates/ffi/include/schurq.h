#ifndef SCHURQ_H
#define SCHURQ_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Status codes returned by every fallible function.
typedef enum {
  SCHURQ_STATUS_OK = 0,
  // A required pointer argument was null.
  SCHURQ_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  SCHURQ_STATUS_INVALID_UTF8 = 2,
  // Malformed JSON, rational or label.
  SCHURQ_STATUS_PARSE = 3,
  // Arguments outside the operation's domain.
  SCHURQ_STATUS_INVALID_ARGUMENT = 4,
  // Two independent computations disagreed.
  SCHURQ_STATUS_DISCREPANCY = 5,
  // A verification suite reported failures.
  SCHURQ_STATUS_VERIFICATION_FAILED = 6,
  // Internal panic; the library state is still usable.
  SCHURQ_STATUS_PANIC = 7,
} SchurqStatus;

// Character basis selector.
typedef enum {
  SCHURQ_BASIS_SCHUR = 0,
  SCHURQ_BASIS_Q = 1,
} SchurqBasis;

// How `schurq_apply_p` evaluates `P^(k)_m`.
typedef enum {
  // Sum of vertex-operator bilinears.
  SCHURQ_METHOD_BRUTE = 0,
  // Normal-ordered current modes (k <= 3).
  SCHURQ_METHOD_MODES = 1,
} SchurqMethod;

typedef enum {
  SCHURQ_MODEL_BGW = 0,
  SCHURQ_MODEL_KW = 1,
} SchurqModel;

typedef enum {
  SCHURQ_TAU_METHOD_CUT_JOIN = 0,
  SCHURQ_TAU_METHOD_CLOSED = 1,
  SCHURQ_TAU_METHOD_BOTH = 2,
} SchurqTauMethod;

// Opaque linear combination of basis elements.
typedef struct SchurqLinComb SchurqLinComb;

// Opaque polynomial handle.
typedef struct SchurqPoly SchurqPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread; empty after a
// success. Valid until the next call into the library on this thread.
const char *schurq_last_error(void);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void schurq_string_free(char *s);

// Release a polynomial handle. Null is ignored.
//
// # Safety
// `p` must come from this library and not have been freed.
void schurq_poly_free(SchurqPoly *p);

// Release a linear-combination handle. Null is ignored.
//
// # Safety
// `l` must come from this library and not have been freed.
void schurq_lincomb_free(SchurqLinComb *l);

// Parse a polynomial from its JSON form.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
SchurqStatus schurq_poly_from_json(const char *json, SchurqPoly **out);

// Canonical JSON of a polynomial.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
SchurqStatus schurq_poly_to_json(const SchurqPoly *p, char **out);

// `S_lambda` or `Q_lambda` for an arbitrary integer label.
//
// # Safety
// `parts` must point to `len` integers (may be null when `len == 0`).
SchurqStatus schurq_character(SchurqBasis basis,
                              const int64_t *parts,
                              size_t len,
                              SchurqPoly **out);

// `H_lambda(t; rho)` with `rho = rho_num / rho_den`, `rho != 1`.
//
// # Safety
// As for [`schurq_character`].
SchurqStatus schurq_hall_littlewood(const int64_t *parts,
                                    size_t len,
                                    int64_t rho_num,
                                    int64_t rho_den,
                                    SchurqPoly **out);

// Sum, difference or product of two polynomials (`op` = '+', '-', '*').
//
// # Safety
// `a`, `b` must be live handles; `out` must be writable.
SchurqStatus schurq_poly_arith(char op, const SchurqPoly *a, const SchurqPoly *b, SchurqPoly **out);

// Exact equality of two polynomials.
//
// # Safety
// `a`, `b` must be live handles; `out` must be writable.
SchurqStatus schurq_poly_equal(const SchurqPoly *a, const SchurqPoly *b, bool *out);

// `P^(k)_m p` at `rho = 0` (Schur) or `rho = -1` (Q).
//
// # Safety
// `p` must be a live handle; `out` must be writable.
SchurqStatus schurq_apply_p(uint32_t k,
                            int64_t m,
                            SchurqBasis basis,
                            SchurqMethod method,
                            const SchurqPoly *p,
                            SchurqPoly **out);

// Closed action of `P^(k)_m` on the basis element with the given label.
//
// # Safety
// `parts` must point to `len` integers; `out` must be writable.
SchurqStatus schurq_apply_p_closed(uint32_t k,
                                   int64_t m,
                                   SchurqBasis basis,
                                   const int64_t *parts,
                                   size_t len,
                                   SchurqLinComb **out);

// A named operator (e.g. "Lhat", "WKW") applied to `p`. `m` is ignored
// by operators without a mode index.
//
// # Safety
// `name` must be NUL-terminated; `p` a live handle; `out` writable.
SchurqStatus schurq_apply_named(const char *name, int64_t m, const SchurqPoly *p, SchurqPoly **out);

// Canonical JSON of a linear combination.
//
// # Safety
// `l` must be a live handle; `out` must be writable.
SchurqStatus schurq_lincomb_to_json(const SchurqLinComb *l, char **out);

// Expand a linear combination into a polynomial.
//
// # Safety
// `l` must be a live handle; `out` must be writable.
SchurqStatus schurq_lincomb_to_poly(const SchurqLinComb *l, SchurqPoly **out);

// Tau-function expansion up to `order`, as Series JSON.
//
// # Safety
// `out` must be writable.
SchurqStatus schurq_tau(SchurqModel model, uint32_t order, SchurqTauMethod method, char **out);

// Run a verification suite by name ("thm1", ..., "all"). `max_weight < 0`
// selects the default sizes. The JSON report is written to `out` even when
// the suite fails, in which case the status is `VerificationFailed`.
//
// # Safety
// `suite` must be NUL-terminated; `out` must be writable.
SchurqStatus schurq_verify(const char *suite, int64_t max_weight, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHURQ_H */
