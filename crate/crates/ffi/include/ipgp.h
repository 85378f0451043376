#ifndef IPGP_H
#define IPGP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum IpgpStatus {
  IPGP_STATUS_OK = 0,
  IPGP_STATUS_INVALID_PARAMS = 1,
  IPGP_STATUS_NULL_POINTER = 2,
  IPGP_STATUS_ORACLE_CAP_EXCEEDED = 3,
  IPGP_STATUS_NO_CONVERGENCE = 4,
  IPGP_STATUS_PARSE = 5,
  IPGP_STATUS_OUT_OF_RANGE = 6,
  IPGP_STATUS_INTERNAL = 7,
} IpgpStatus;

// Opaque integer polynomial.
typedef struct IpgpPoly IpgpPoly;

// Opaque root report.
typedef struct IpgpRootReport IpgpRootReport;

typedef struct IpgpRoot {
  double re;
  double im;
  double residual;
} IpgpRoot;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failed call on this thread, or NULL. The
// pointer stays valid until the next failing call on the same thread.
const char *ipgp_last_error(void);

// Library version as a static NUL-terminated string.
const char *ipgp_version(void);

// Computes `Ind(GP(n,k), x)` with the transfer matrix.
//
// # Safety
// `out` must be NULL or valid for a pointer write.
enum IpgpStatus ipgp_independence_polynomial(int64_t n, int64_t k, struct IpgpPoly **out);

// Computes `Ind(GP(n,k), x)` by brute-force enumeration (at most 30
// vertices).
//
// # Safety
// `out` must be NULL or valid for a pointer write.
enum IpgpStatus ipgp_census_polynomial(int64_t n, int64_t k, struct IpgpPoly **out);

// Parses `{"coeffs": ["1", "10", ...]}`.
//
// # Safety
// `json` must be NULL or a NUL-terminated string; `out` must be NULL or
// valid for a pointer write.
enum IpgpStatus ipgp_poly_from_json(const char *json, struct IpgpPoly **out);

// Serializes as `{"coeffs": [...]}`; NULL if `poly` is NULL.
//
// # Safety
// `poly` must be NULL or a live handle.
char *ipgp_poly_to_json(const struct IpgpPoly *poly);

// Degree, or -1 for the zero polynomial or a NULL handle.
//
// # Safety
// `poly` must be NULL or a live handle.
int64_t ipgp_poly_degree(const struct IpgpPoly *poly);

// Coefficient of `x^index` as a decimal string (zero past the degree);
// NULL if `poly` is NULL.
//
// # Safety
// `poly` must be NULL or a live handle.
char *ipgp_poly_coeff(const struct IpgpPoly *poly, size_t index);

// # Safety
// Both arguments must be NULL or live handles.
bool ipgp_poly_equal(const struct IpgpPoly *a, const struct IpgpPoly *b);

// # Safety
// `poly` must be NULL or a handle not yet freed.
void ipgp_poly_free(struct IpgpPoly *poly);

// Real roots counted with multiplicity, exactly.
//
// # Safety
// `poly` must be NULL or a live handle; `out` NULL or writable.
enum IpgpStatus ipgp_count_real_roots(const struct IpgpPoly *poly, size_t *out);

// Locates all complex roots. `precision_bits` of 0 selects the default.
//
// # Safety
// `poly` must be NULL or a live handle; `out` NULL or writable.
enum IpgpStatus ipgp_find_roots(const struct IpgpPoly *poly,
                                uint32_t precision_bits,
                                struct IpgpRootReport **out);

// Number of roots (the degree); 0 for NULL.
//
// # Safety
// `report` must be NULL or a live handle.
size_t ipgp_report_degree(const struct IpgpRootReport *report);

// # Safety
// `report` must be NULL or a live handle; `out` NULL or writable.
enum IpgpStatus ipgp_report_root(const struct IpgpRootReport *report,
                                 size_t index,
                                 struct IpgpRoot *out);

// # Safety
// `report` must be NULL or a live handle.
size_t ipgp_report_exact_real_count(const struct IpgpRootReport *report);

// # Safety
// `report` must be NULL or a live handle.
bool ipgp_report_is_real_rooted(const struct IpgpRootReport *report);

// NaN for NULL.
//
// # Safety
// `report` must be NULL or a live handle.
double ipgp_report_max_residual(const struct IpgpRootReport *report);

// # Safety
// `report` must be NULL or a handle not yet freed.
void ipgp_report_free(struct IpgpRootReport *report);

// # Safety
// `s` must be NULL or a string returned by this library and not yet freed.
void ipgp_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IPGP_H */
