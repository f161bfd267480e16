#ifndef FINRING_H
#define FINRING_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FrStatus {
  FR_STATUS_OK = 0,
  FR_STATUS_NULL_POINTER = 1,
  FR_STATUS_INVALID_UTF8 = 2,
  FR_STATUS_INVALID_ARGUMENT = 3,
  FR_STATUS_PARSE = 4,
  FR_STATUS_AXIOM_VIOLATION = 5,
  FR_STATUS_RESOURCE_CAP = 6,
  FR_STATUS_IO = 7,
  FR_STATUS_PANIC = 8,
} FrStatus;

typedef struct FrGraph FrGraph;

typedef struct FrPoly FrPoly;

typedef struct FrRing FrRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer is
 * valid until the next `fr_*` call on the same thread.
 */
const char *fr_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void fr_string_free(char *s);

enum FrStatus fr_set_enumeration_cap(uint64_t cap);

enum FrStatus fr_set_evaluation_budget(uint64_t budget);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum FrStatus fr_ring_zn(size_t n, struct FrRing **out);

/**
 * # Safety
 * `out` must be valid for writes.
 */
enum FrStatus fr_ring_gf(uint64_t p, uint32_t k, struct FrRing **out);

/**
 * Builds a ring from row-major `order * order` tables. Element 0 must be
 * the additive identity.
 *
 * # Safety
 * `add` and `mul` must point to `order * order` readable values; `out` must
 * be valid for writes.
 */
enum FrStatus fr_ring_from_tables(size_t order,
                                  const size_t *add,
                                  const size_t *mul,
                                  struct FrRing **out);

/**
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum FrStatus fr_ring_parse(const char *text, struct FrRing **out);

/**
 * # Safety
 * `r` must be a live ring handle; `out` must be valid for writes.
 */
enum FrStatus fr_ring_to_ringtab(const struct FrRing *r, char **out);

/**
 * # Safety
 * `a` and `b` must be live ring handles; `out` must be valid for writes.
 */
enum FrStatus fr_ring_direct_sum(const struct FrRing *a,
                                 const struct FrRing *b,
                                 struct FrRing **out);

/**
 * Order of the ring, or 0 for NULL.
 *
 * # Safety
 * `r` must be NULL or a live ring handle.
 */
size_t fr_ring_order(const struct FrRing *r);

/**
 * # Safety
 * `r` must be a live ring handle; `out` must be valid for writes.
 */
enum FrStatus fr_ring_add(const struct FrRing *r, size_t x, size_t y, size_t *out);

/**
 * # Safety
 * `r` must be a live ring handle; `out` must be valid for writes.
 */
enum FrStatus fr_ring_mul(const struct FrRing *r, size_t x, size_t y, size_t *out);

/**
 * Structure report as `key: value` lines.
 *
 * # Safety
 * `r` must be a live ring handle; `out` must be valid for writes.
 */
enum FrStatus fr_ring_report(const struct FrRing *r, char **out);

/**
 * Canonical certificate in hex; equal strings mean isomorphic rings.
 *
 * # Safety
 * `r` must be a live ring handle; `out` must be valid for writes.
 */
enum FrStatus fr_ring_certificate(const struct FrRing *r, char **out);

/**
 * # Safety
 * `a` and `b` must be live ring handles; `out` must be valid for writes.
 */
enum FrStatus fr_ring_isomorphic(const struct FrRing *a, const struct FrRing *b, bool *out);

/**
 * # Safety
 * `r` must be NULL or a ring handle not yet freed.
 */
void fr_ring_free(struct FrRing *r);

/**
 * # Safety
 * `r` must be a live ring handle; `out` must be valid for writes.
 */
enum FrStatus fr_zero_divisor_graph(const struct FrRing *r, struct FrGraph **out);

/**
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t fr_graph_vertex_count(const struct FrGraph *g);

/**
 * # Safety
 * `g` must be NULL or a live graph handle.
 */
size_t fr_graph_edge_count(const struct FrGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be valid for writes.
 */
enum FrStatus fr_graph_canonical_form(const struct FrGraph *g, char **out);

/**
 * # Safety
 * `g` must be a live graph handle; `out` must be valid for writes.
 */
enum FrStatus fr_graph_to_dot(const struct FrGraph *g, char **out);

/**
 * # Safety
 * `g` and `h` must be live graph handles; `out` must be valid for writes.
 */
enum FrStatus fr_graph_isomorphic(const struct FrGraph *g, const struct FrGraph *h, bool *out);

/**
 * # Safety
 * `g` must be NULL or a graph handle not yet freed.
 */
void fr_graph_free(struct FrGraph *g);

/**
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum FrStatus fr_poly_parse(const char *text, struct FrPoly **out);

/**
 * # Safety
 * `p` must be a live polynomial handle; `out` must be valid for writes.
 */
enum FrStatus fr_poly_render(const struct FrPoly *p, char **out);

/**
 * Exhaustively checks `p = 0` on `r`. On failure, when `assignment` is not
 * NULL, the values of variables `1..=assignment_len` in the least
 * counterexample are written to it (unused variables get 0).
 *
 * # Safety
 * `r` and `p` must be live handles; `holds` must be valid for writes;
 * `assignment` must be NULL or valid for `assignment_len` writes.
 */
enum FrStatus fr_identity_check(const struct FrRing *r,
                                const struct FrPoly *p,
                                bool *holds,
                                size_t *assignment,
                                size_t assignment_len);

/**
 * # Safety
 * `p` must be NULL or a polynomial handle not yet freed.
 */
void fr_poly_free(struct FrPoly *p);

/**
 * Number of isomorphism classes of rings of order `n`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum FrStatus fr_atlas_count(uint64_t n, size_t *out);

/**
 * The `index`-th ring of order `n`, in atlas order.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum FrStatus fr_atlas_ring(uint64_t n, size_t index, struct FrRing **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FINRING_H */
