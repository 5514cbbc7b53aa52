#ifndef FLOERCOVER_H
#define FLOERCOVER_H

/* This file is generated by cbindgen from floercover-ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible function.
typedef enum FcStatus {
  // Success.
  FC_STATUS_OK = 0,
  // A required pointer argument was null.
  FC_STATUS_NULL_POINTER = 1,
  // Arguments violate a precondition (bad slope, wrong profile kind, ...).
  FC_STATUS_INVALID_INPUT = 2,
  // The profile name is not in the built-in catalog or the document.
  FC_STATUS_UNKNOWN_PROFILE = 3,
  // The profile fails its structural invariants.
  FC_STATUS_INVALID_PROFILE = 4,
  // The document could not be parsed.
  FC_STATUS_PARSE_ERROR = 5,
  // An intermediate value left the exact integer range.
  FC_STATUS_OVERFLOW = 6,
  // A string argument was not valid UTF-8.
  FC_STATUS_UTF8_ERROR = 7,
  // An index argument was out of range.
  FC_STATUS_OUT_OF_RANGE = 8,
  // The library panicked; this indicates a bug in floercover.
  FC_STATUS_INTERNAL_PANIC = 9,
} FcStatus;

// Discriminants for certificates reported by [`fc_verdict_certificate`].
typedef enum FcCertificateKind {
  // values: (ceil(q/p) on the cover, floor(q'/p') on the base).
  FC_CERTIFICATE_KIND_SAME_KNOT_HYPOTHESES = 0,
  // values: ((2g-1)ceil(q/p), (2g'-1)floor(q'/p')).
  FC_CERTIFICATE_KIND_GENUS_HYPOTHESES = 1,
  // values: (max dimension over the cover, min dimension over the base).
  FC_CERTIFICATE_KIND_DIMENSION_GAP = 2,
  // values: (cover is L-space as 0/1, base is L-space as 0/1).
  FC_CERTIFICATE_KIND_LSPACE_CONTRADICTION = 3,
} FcCertificateKind;

// Opaque per-surgery dimension table handle.
typedef struct FcDimTable FcDimTable;

// Opaque knot-invariant profile handle.
typedef struct FcProfile FcProfile;

// Opaque obstruction verdict handle.
typedef struct FcVerdict FcVerdict;

// Flat result record for one trefoil lens-cover family member.
typedef struct FcTrefoilFamily {
  uint64_t p;
  uint64_t q_prime;
  uint64_t p_prime;
  // Number of sheets, 6k + 1.
  uint64_t degree;
  uint64_t cover_p;
  uint64_t cover_q;
  uint64_t base_p;
  uint64_t base_q;
  // p' = p * (6k + 1).
  bool product_identity;
  // Both slopes are Moser slopes with the expected lens spaces.
  bool moser_applies;
  // The cyclic cover of the base is homeomorphic to the cover.
  bool cover_matches;
  // 6k + 1 is r^n for the prime below.
  bool degree_is_prime_power;
  // r, when the degree is a prime power (0 otherwise).
  uint64_t prime_base;
  // n, when the degree is a prime power (0 otherwise).
  uint32_t prime_exponent;
} FcTrefoilFamily;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent non-OK status on this thread. The pointer is
// valid until the next failing call on the same thread. Never null.
const char *fc_last_error_message(void);

// Looks up a built-in profile (`unknot`, `T(2,N)` for odd N >= 3,
// `P(-2,3,7)`). On success writes a new handle to `out`.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be a valid pointer.
enum FcStatus fc_profile_builtin(const char *name, struct FcProfile **out);

// Builds the profile of a knot with a positive L-space surgery: all hook
// homology dimensions 1, nu = genus. Genus must be >= 1.
//
// # Safety
// `name` must be a NUL-terminated string; `out` must be a valid pointer.
enum FcStatus fc_profile_lspace_knot(const char *name, uint32_t genus, struct FcProfile **out);

// Parses a profile document (the TOML format described in the README) and
// extracts the profile named `name`.
//
// # Safety
// `text` and `name` must be NUL-terminated strings; `out` must be valid.
enum FcStatus fc_profile_from_document(const char *text, const char *name, struct FcProfile **out);

// Genus of the profile.
//
// # Safety
// `profile` must be a live handle from this library.
uint32_t fc_profile_genus(const struct FcProfile *profile);

// The invariant nu of the profile.
//
// # Safety
// `profile` must be a live handle from this library.
uint32_t fc_profile_nu(const struct FcProfile *profile);

// Frees a profile handle. Null is ignored.
//
// # Safety
// `profile` must be null or a handle not freed before.
void fc_profile_free(struct FcProfile *profile);

// phi(p/q, i, s): the number of integers n with floor((i + p*n)/q) = s.
//
// # Safety
// `out` must be a valid pointer.
enum FcStatus fc_phi(int64_t p, int64_t q, int64_t i, int64_t s, uint64_t *out);

// The universal bounds floor(|q/p|) and ceil(|q/p|) on phi.
//
// # Safety
// `out_lower` and `out_upper` must be valid pointers.
enum FcStatus fc_phi_bounds(int64_t p, int64_t q, uint64_t *out_lower, uint64_t *out_upper);

// Sum of phi over s_lo <= s <= s_hi, computed as one interval count.
//
// # Safety
// `out` must be a valid pointer.
enum FcStatus fc_phi_window_sum(int64_t p,
                                int64_t q,
                                int64_t i,
                                int64_t s_lo,
                                int64_t s_hi,
                                uint64_t *out);

// Floer dimension of S^3_{p/q}(K) in the Spin^c class labeled i.
//
// # Safety
// `profile` must be a live handle; `out` must be valid.
enum FcStatus fc_hf_dim(const struct FcProfile *profile,
                        int64_t p,
                        int64_t q,
                        int64_t i,
                        uint64_t *out);

// Computes the full dimension table over all |p| Spin^c classes.
//
// # Safety
// `profile` must be a live handle; `out` must be valid.
enum FcStatus fc_hf_table_new(const struct FcProfile *profile,
                              int64_t p,
                              int64_t q,
                              struct FcDimTable **out);

// Number of Spin^c classes (|p|) in the table.
//
// # Safety
// `table` must be a live handle.
uint64_t fc_dim_table_class_count(const struct FcDimTable *table);

// Dimension in the class with canonical residue `index`.
//
// # Safety
// `table` must be a live handle; `out` must be valid.
enum FcStatus fc_dim_table_dim(const struct FcDimTable *table, uint64_t index, uint64_t *out);

// Sum of the dimensions over all classes.
//
// # Safety
// `table` must be a live handle.
uint64_t fc_dim_table_total(const struct FcDimTable *table);

// True iff every class has dimension 1 (total = |H_1| = |p|).
//
// # Safety
// `table` must be a live handle.
bool fc_dim_table_is_lspace(const struct FcDimTable *table);

// Frees a dimension-table handle. Null is ignored.
//
// # Safety
// `table` must be null or a handle not freed before.
void fc_dim_table_free(struct FcDimTable *table);

// Whether S^3_{p/q}(K) is a Z/rZ-L-space for the primes the profile asserts.
//
// # Safety
// `profile` must be a live handle; `out` must be valid.
enum FcStatus fc_is_zrz_lspace(const struct FcProfile *profile, int64_t p, int64_t q, bool *out);

// Runs every applicable obstruction test on the query "can cover_p/cover_q
// surgery on `cover` be an r^n-sheeted regular cover of base_p/base_q
// surgery on `base`?". `prime` = 0 leaves the coefficient prime unpinned.
//
// # Safety
// `cover` and `base` must be live handles; `out` must be valid.
enum FcStatus fc_obstruct_all(const struct FcProfile *cover,
                              int64_t cover_p,
                              int64_t cover_q,
                              const struct FcProfile *base,
                              int64_t base_p,
                              int64_t base_q,
                              uint64_t prime,
                              struct FcVerdict **out);

// True when the verdict certifies that no such cover exists.
//
// # Safety
// `verdict` must be a live handle.
bool fc_verdict_is_obstructed(const struct FcVerdict *verdict);

// Number of certificates attached to the verdict.
//
// # Safety
// `verdict` must be a live handle.
uint64_t fc_verdict_certificate_count(const struct FcVerdict *verdict);

// Reads certificate `index` as (kind, value_a, value_b); the meaning of the
// two values per kind is documented on [`FcCertificateKind`].
//
// # Safety
// `verdict` must be a live handle; out-pointers must be valid.
enum FcStatus fc_verdict_certificate(const struct FcVerdict *verdict,
                                     uint64_t index,
                                     enum FcCertificateKind *out_kind,
                                     uint64_t *out_value_a,
                                     uint64_t *out_value_b);

// Frees a verdict handle. Null is ignored.
//
// # Safety
// `verdict` must be null or a handle not freed before.
void fc_verdict_free(struct FcVerdict *verdict);

// Moser's lens space for p/q-surgery on the right-handed trefoil. Writes
// whether a lens space exists to `out_has`; the normalized L(p', q') to the
// other out-pointers when it does.
//
// # Safety
// All out-pointers must be valid.
enum FcStatus fc_moser_trefoil(int64_t p,
                               int64_t q,
                               bool *out_has,
                               uint64_t *out_lens_p,
                               uint64_t *out_lens_q);

// Unoriented homeomorphism test for L(p1, q1) and L(p2, q2).
//
// # Safety
// `out` must be a valid pointer.
enum FcStatus fc_lens_homeomorphic(uint64_t p1, int64_t q1, uint64_t p2, int64_t q2, bool *out);

// Degree-d cyclic cover of L(p, q); defined when d divides p.
//
// # Safety
// All out-pointers must be valid.
enum FcStatus fc_cyclic_cover(uint64_t p,
                              int64_t q,
                              uint64_t degree,
                              bool *out_has,
                              uint64_t *out_cover_p,
                              uint64_t *out_cover_q);

// Verifies one member of the trefoil lens-cover family. `sign` must be
// +1 (slopes (6q+1)/q) or -1 (slopes (6q-1)/q); q and k must be >= 1.
//
// # Safety
// `out` must be a valid pointer.
enum FcStatus fc_trefoil_family(uint64_t q, uint64_t k, int32_t sign, struct FcTrefoilFamily *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FLOERCOVER_H */
