#ifndef APSUM_H
#define APSUM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result code of every fallible call.
 */
typedef enum ApsumStatus {
  APSUM_STATUS_OK = 0,
  APSUM_STATUS_NULL_POINTER = 1,
  /*
   An argument is outside the operation's domain.
   */
  APSUM_STATUS_DOMAIN = 2,
  /*
   A string argument could not be parsed.
   */
  APSUM_STATUS_PARSE = 3,
  /*
   An internal consistency check failed.
   */
  APSUM_STATUS_INTERNAL = 4,
} ApsumStatus;

typedef enum ApsumMethod {
  APSUM_METHOD_SIMPLE = 0,
  APSUM_METHOD_WHITNEY = 1,
  APSUM_METHOD_GRIFFITHS = 2,
  APSUM_METHOD_BAZSO = 3,
  APSUM_METHOD_RAMIREZ = 4,
  APSUM_METHOD_BERNOULLI = 5,
} ApsumMethod;

typedef enum ApsumBinomialForm {
  APSUM_BINOMIAL_FORM_GRIFFITHS = 0,
  APSUM_BINOMIAL_FORM_BAZSO = 1,
  APSUM_BINOMIAL_FORM_RAMIREZ = 2,
} ApsumBinomialForm;

typedef enum ApsumFormula {
  APSUM_FORMULA_SIMPLE6 = 0,
  APSUM_FORMULA_WHITNEY7 = 1,
  APSUM_FORMULA_GRIFFITHS1 = 2,
  APSUM_FORMULA_BAZSO2 = 3,
  APSUM_FORMULA_RAMIREZ3 = 4,
  APSUM_FORMULA_BERNOULLI4 = 5,
} ApsumFormula;

/*
 Opaque coefficient vector of a power-sum polynomial.
 */
typedef struct ApsumPolynomial ApsumPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message describing the last failure on this thread, or null. Valid until
 the next failing call on the same thread; do not free.
 */
const char *apsum_last_error(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must be null or a pointer obtained from this library and not yet freed.
 */
void apsum_string_free(char *s);

/*
 Computes the coefficients `c_1..c_{k+1}` of `S(n)` by `method`.

 # Safety
 `out` must be valid for a pointer write.
 */
enum ApsumStatus apsum_polynomial_new(int64_t k,
                                      int64_t m,
                                      int64_t r,
                                      enum ApsumMethod method,
                                      struct ApsumPolynomial **out);

/*
 Releases a polynomial handle. Null is ignored.

 # Safety
 `poly` must be null or a handle from [`apsum_polynomial_new`] not yet freed.
 */
void apsum_polynomial_free(struct ApsumPolynomial *poly);

/*
 Number of coefficients (`k + 1`), or 0 for a null handle.

 # Safety
 `poly` must be null or a live handle.
 */
size_t apsum_polynomial_len(const struct ApsumPolynomial *poly);

/*
 Coefficient `c_t`, `1 <= t <= k+1`, as a string.

 # Safety
 `poly` must be a live handle; `out` valid for a pointer write.
 */
enum ApsumStatus apsum_polynomial_coeff(const struct ApsumPolynomial *poly, uint32_t t, char **out);

/*
 `S(n)` evaluated from the coefficient vector.

 # Safety
 `poly` must be a live handle; `out` valid for a pointer write.
 */
enum ApsumStatus apsum_polynomial_eval(const struct ApsumPolynomial *poly, uint64_t n, char **out);

/*
 Brute-force `sum_{i<n} (i m + r)^k`.

 # Safety
 `out` must be valid for a pointer write.
 */
enum ApsumStatus apsum_direct_sum(int64_t k, int64_t m, int64_t r, uint64_t n, char **out);

/*
 `S(n)` through a closed binomial-basis form.

 # Safety
 `out` must be valid for a pointer write.
 */
enum ApsumStatus apsum_eval_binomial_form(int64_t k,
                                          int64_t m,
                                          int64_t r,
                                          uint64_t n,
                                          enum ApsumBinomialForm form,
                                          char **out);

/*
 Bernoulli number `B_k` (`B_1 = -1/2`).

 # Safety
 `out` must be valid for a pointer write.
 */
enum ApsumStatus apsum_bernoulli_number(uint32_t k, char **out);

/*
 Bernoulli polynomial `B_k(x)` at a rational given as `"p/q"` or `"p"`.

 # Safety
 `x` must be a NUL-terminated string; `out` valid for a pointer write.
 */
enum ApsumStatus apsum_bernoulli_poly_eval(uint32_t k, const char *x, char **out);

/*
 Signed Stirling number of the first kind `s(k, j)`.

 # Safety
 `out` must be valid for a pointer write.
 */
enum ApsumStatus apsum_stirling1(uint32_t k, uint32_t j, char **out);

/*
 Stirling number of the second kind `S(k, j)`.

 # Safety
 `out` must be valid for a pointer write.
 */
enum ApsumStatus apsum_stirling2(uint32_t k, uint32_t j, char **out);

/*
 r-Whitney number of the second kind `W_{m,r}(k, j)`.

 # Safety
 `out` must be valid for a pointer write.
 */
enum ApsumStatus apsum_r_whitney(uint32_t k, uint32_t j, uint32_t m, uint32_t r, char **out);

/*
 `A_{m,r}(k, j)`.

 # Safety
 `out` must be valid for a pointer write.
 */
enum ApsumStatus apsum_a_number(uint32_t k, uint32_t j, uint32_t m, uint32_t r, char **out);

/*
 Instrumented cost of `c_{k,t}` under full expansion.

 # Safety
 Both out-pointers must be valid for writes.
 */
enum ApsumStatus apsum_cost_profile(enum ApsumFormula formula,
                                    uint32_t k,
                                    uint32_t t,
                                    uint64_t *power_evals,
                                    uint64_t *total_terms);

/*
 Runs the identity ledger over `k <= max_k` and the given `m`, `r` sets,
 storing the number of failed identities in `failed`.

 # Safety
 `m_set` and `r_set` must point to `m_len` / `r_len` readable values (or be
 null with length 0); `failed` must be valid for a write.
 */
enum ApsumStatus apsum_verify(uint32_t max_k,
                              const uint32_t *m_set,
                              size_t m_len,
                              const uint32_t *r_set,
                              size_t r_len,
                              size_t *failed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* APSUM_H */
