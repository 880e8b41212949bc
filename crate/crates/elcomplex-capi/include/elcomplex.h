/* C interface for the elcomplex library. */

#pragma once

/* Generated with cbindgen:0.26.0 */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Built-in domain shapes for the check entry points, always centered at
// the origin.
typedef enum ElcxDomainKind {
  // Euclidean disk of the given radius.
  ELCX_DOMAIN_KIND_DISK = 0,
  // Tilde-norm disk (the region bounded by the parameter ellipse).
  ELCX_DOMAIN_KIND_ELLIPSE = 1,
} ElcxDomainKind;

// Status codes returned by every fallible function.
typedef enum ElcxStatus {
  ELCX_STATUS_OK = 0,
  ELCX_STATUS_NULL_POINTER = 1,
  ELCX_STATUS_ELLIPTICITY_VIOLATION = 2,
  ELCX_STATUS_DIVISION_BY_ZERO = 3,
  ELCX_STATUS_POLE_EVALUATION = 4,
  ELCX_STATUS_POLE_OUTSIDE_DOMAIN = 5,
  ELCX_STATUS_NOT_STAR_SHAPED = 6,
  ELCX_STATUS_NOT_HOLOMORPHIC = 7,
  ELCX_STATUS_INVALID_ARGUMENT = 8,
  ELCX_STATUS_PARSE_ERROR = 9,
} ElcxStatus;

// Opaque test function from the built-in catalog.
typedef struct ElcxFunction ElcxFunction;

// Opaque validated parameter pair with its cached derived constants.
typedef struct ElcxParams ElcxParams;

// An element `x + iy` of the algebra.
typedef struct ElcxComplex {
  double re;
  double im;
} ElcxComplex;

// Value and both partial derivatives of a function at a point.
typedef struct ElcxJet {
  struct ElcxComplex value;
  struct ElcxComplex dx;
  struct ElcxComplex dy;
} ElcxJet;

// Outcome of one verification check. `abs_error` and `tolerance` are in
// the Euclidean norm; `passed` is `abs_error <= tolerance`.
typedef struct ElcxReport {
  struct ElcxComplex computed;
  struct ElcxComplex reference;
  double abs_error;
  double tolerance;
  uint32_t n_theta;
  uint32_t n_r;
  bool passed;
} ElcxReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Validates `(alpha, beta)` and writes a new handle through `out`.
// The handle must be released with [`elcx_params_free`].
//
// # Safety
// `out` must be a valid pointer to writable memory for one pointer.
enum ElcxStatus elcx_params_new(double alpha, double beta, struct ElcxParams **out);

// Releases a handle from [`elcx_params_new`]. Null is a no-op.
//
// # Safety
// `p` must be null or a pointer previously returned by `elcx_params_new`
// that has not been freed.
void elcx_params_free(struct ElcxParams *p);

// # Safety
// `p` must be null or a live handle. Returns NaN on null.
double elcx_params_alpha(const struct ElcxParams *p);

// # Safety
// `p` must be null or a live handle. Returns NaN on null.
double elcx_params_beta(const struct ElcxParams *p);

// `4*alpha - beta^2`, guaranteed positive for a live handle.
//
// # Safety
// `p` must be null or a live handle. Returns NaN on null.
double elcx_params_discriminant(const struct ElcxParams *p);

// The algebra square root of -1, `(beta + 2i)/sqrt(4*alpha - beta^2)`.
//
// # Safety
// `p` must be null or a live handle. Returns NaN components on null.
struct ElcxComplex elcx_params_i_hat(const struct ElcxParams *p);

// Lower norm-equivalence constant: `k1 * ||z||_(a,b) <= ||z||_(1,0)`.
//
// # Safety
// `p` must be null or a live handle. Returns NaN on null.
double elcx_params_k1(const struct ElcxParams *p);

// Upper norm-equivalence constant: `||z||_(1,0) <= k2 * ||z||_(a,b)`.
//
// # Safety
// `p` must be null or a live handle. Returns NaN on null.
double elcx_params_k2(const struct ElcxParams *p);

// Product in the algebra.
//
// # Safety
// `p` must be null or a live handle. Returns NaN components on null.
struct ElcxComplex elcx_mul(const struct ElcxParams *p, struct ElcxComplex a, struct ElcxComplex b);

// Multiplicative inverse; fails on the zero element.
//
// # Safety
// `p` must be null or a live handle; `out` must be valid writable memory.
enum ElcxStatus elcx_inv(const struct ElcxParams *p, struct ElcxComplex a, struct ElcxComplex *out);

// Conjugation `x + iy -> x - iy` (parameter free).
struct ElcxComplex elcx_conj(struct ElcxComplex a);

// The tilde map `x + iy -> y - ix` (parameter free).
struct ElcxComplex elcx_tilde(struct ElcxComplex a);

// The multiplicative norm `sqrt(x^2 - beta*x*y + alpha*y^2)`.
//
// # Safety
// `p` must be null or a live handle. Returns NaN on null.
double elcx_norm(const struct ElcxParams *p, struct ElcxComplex a);

// The real inner product associated with the norm.
//
// # Safety
// `p` must be null or a live handle. Returns NaN on null.
double elcx_inner(const struct ElcxParams *p, struct ElcxComplex a, struct ElcxComplex b);

// Parses a test-function descriptor, e.g. `{"kind":"tilde_power","n":3}`,
// and writes a handle through `out`. Release with [`elcx_function_free`].
//
// # Safety
// `json` must be a valid nul-terminated string; `out` must be writable.
enum ElcxStatus elcx_function_parse(const char *json, struct ElcxFunction **out);

// Releases a handle from [`elcx_function_parse`]. Null is a no-op.
//
// # Safety
// `f` must be null or a pointer previously returned by
// `elcx_function_parse` that has not been freed.
void elcx_function_free(struct ElcxFunction *f);

// Evaluates the function's exact jet (value and both partials) at a point.
//
// # Safety
// `f` and `p` must be live handles; `out` must be writable.
enum ElcxStatus elcx_function_eval_jet(const struct ElcxFunction *f,
                                       const struct ElcxParams *p,
                                       struct ElcxComplex at,
                                       struct ElcxJet *out);

// Applies the generalized Cauchy-Riemann operator to the function at a
// point; zero (to roundoff) iff the function is holomorphic there.
//
// # Safety
// `f` and `p` must be live handles; `out` must be writable.
enum ElcxStatus elcx_function_dbar(const struct ElcxFunction *f,
                                   const struct ElcxParams *p,
                                   struct ElcxComplex at,
                                   struct ElcxComplex *out);

// Kernel winding integral over a circle of radius `eps` against the
// analytic constant `2*pi*i_hat`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum ElcxStatus elcx_check_winding(const struct ElcxParams *p,
                                   double eps,
                                   uint32_t n_theta,
                                   struct ElcxReport *out);

// Green-Gauss identity for `f` on a domain of the given kind and radius.
//
// # Safety
// `p` and `f` must be live handles; `out` must be writable.
enum ElcxStatus elcx_check_green_gauss(const struct ElcxParams *p,
                                       const struct ElcxFunction *f,
                                       enum ElcxDomainKind domain,
                                       double radius,
                                       uint32_t n_theta,
                                       uint32_t n_r,
                                       struct ElcxReport *out);

// Schmidt inequality for the reciprocal-distance integral about `pole`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum ElcxStatus elcx_check_schmidt(const struct ElcxParams *p,
                                   enum ElcxDomainKind domain,
                                   double radius,
                                   struct ElcxComplex pole,
                                   uint32_t n_theta,
                                   uint32_t n_r,
                                   struct ElcxReport *out);

// One-term representation formula for a holomorphic `f`; holomorphy is
// verified by sampling and reported as [`ElcxStatus::NotHolomorphic`].
//
// # Safety
// `p` and `f` must be live handles; `out` must be writable.
enum ElcxStatus elcx_cauchy(const struct ElcxParams *p,
                            const struct ElcxFunction *f,
                            enum ElcxDomainKind domain,
                            double radius,
                            struct ElcxComplex zeta,
                            uint32_t n_theta,
                            struct ElcxReport *out);

// Two-term representation formula for a continuously differentiable `f`.
//
// # Safety
// `p` and `f` must be live handles; `out` must be writable.
enum ElcxStatus elcx_cauchy_pompeiu(const struct ElcxParams *p,
                                    const struct ElcxFunction *f,
                                    enum ElcxDomainKind domain,
                                    double radius,
                                    struct ElcxComplex zeta,
                                    uint32_t n_theta,
                                    uint32_t n_r,
                                    struct ElcxReport *out);

// Boundary defect of the vanishing limit at a single radius `eps`.
//
// # Safety
// `p` and `f` must be live handles; `out` must be writable.
enum ElcxStatus elcx_check_vanishing_limit(const struct ElcxParams *p,
                                           const struct ElcxFunction *f,
                                           struct ElcxComplex zeta,
                                           double eps,
                                           uint32_t n_theta,
                                           struct ElcxReport *out);

// Runs the full default verification battery and returns the reports as a
// newline-delimited JSON string. Free the string with
// [`elcx_string_free`].
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum ElcxStatus elcx_verify_battery_json(const struct ElcxParams *p,
                                         uint32_t n_theta,
                                         uint32_t n_r,
                                         char **out);

// Frees a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must be null or a string returned by this library that has not been
// freed.
void elcx_string_free(char *s);

// Static description of a status code.
const char *elcx_status_message(enum ElcxStatus status);

// Library version as a static string.
const char *elcx_version(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus
