#ifndef VALRING_H
#define VALRING_H

/* Generated by cbindgen from valring-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result discipline for every fallible entry point.
 */
typedef enum {
  VALRING_STATUS_OK = 0,
  VALRING_STATUS_NULL_ARGUMENT = 1,
  VALRING_STATUS_PARSE = 2,
  VALRING_STATUS_INVALID_ELEMENT = 3,
  VALRING_STATUS_NOT_INVERTIBLE = 4,
  VALRING_STATUS_DEGENERATE_VECTOR = 5,
  VALRING_STATUS_DIMENSION_MISMATCH = 6,
  VALRING_STATUS_RING_MISMATCH = 7,
  VALRING_STATUS_CAPACITY = 8,
  VALRING_STATUS_NUMERICAL = 9,
  VALRING_STATUS_CONFIG = 10,
  VALRING_STATUS_IO = 11,
  VALRING_STATUS_OUT_OF_RANGE = 12,
  VALRING_STATUS_BUFFER_TOO_SMALL = 13,
  VALRING_STATUS_PANIC = 14,
} ValringStatus;

/**
 * Opaque bipartite graph handle.
 */
typedef struct ValringGraph ValringGraph;

/**
 * Opaque ring handle.
 */
typedef struct ValringRing ValringRing;

/**
 * Singular-value summary of a graph.
 */
typedef struct {
  uint64_t part_size;
  uint64_t degree;
  double lambda3;
  double bound;
  bool pass;
} ValringSpectralReport;

/**
 * One expander-mixing spot check.
 */
typedef struct {
  uint64_t x_size;
  uint64_t y_size;
  uint64_t edges;
  double main_term;
  double error_bound;
  bool pass;
} ValringMixingRecord;

/**
 * |BA+C| against the growth bound.
 */
typedef struct {
  uint64_t a_size;
  uint64_t b_size;
  uint64_t c_size;
  uint64_t lhs;
  double rhs;
  double ratio;
  bool pass;
} ValringTheorem1Report;

/**
 * Collision energy of a product line family.
 */
typedef struct {
  uint64_t e;
  uint64_t distinct_lines;
  uint64_t weight;
  uint64_t a_size;
  uint64_t evaluation_set_size;
  double rhs;
  bool collision_pass;
  bool cauchy_schwarz_pass;
} ValringEnergyReport;

/**
 * Square-sumset energy chain results.
 */
typedef struct {
  uint64_t a_size;
  uint64_t energy_squares;
  uint64_t square_triple_sumset;
  bool cs_pass;
  bool relax_pass;
  bool collision_pass;
  bool char_two;
  bool hypothesis;
  bool has_ratio;
  double ratio;
  bool pass;
} ValringTheorem2Report;

/**
 * Iterated sumset growth witness, when one was found.
 */
typedef struct {
  uint64_t a_size;
  uint64_t b_size;
  uint64_t sum_ab_size;
  uint32_t k;
  bool found;
  uint64_t x_size;
  uint64_t x_plus_kb;
  double bound;
} ValringPlunneckeReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static human-readable name for a status code.
 */
const char *valring_status_message(ValringStatus status);

/**
 * Library version as a static NUL-terminated string.
 */
const char *valring_version(void);

/**
 * Parse a ring spec such as "Z/2^3" or "GF(4)[t]/t^2" into a handle.
 *
 * # Safety
 * `spec` must be a valid NUL-terminated string; `out` must be writable.
 */
ValringStatus valring_ring_parse(const char *spec, ValringRing **out);

/**
 * Release a ring handle. Null is a no-op.
 *
 * # Safety
 * `ring` must be null or a pointer from `valring_ring_parse` not yet freed.
 */
void valring_ring_free(ValringRing *ring);

/**
 * Ring order q^r; 0 for a null handle.
 *
 * # Safety
 * `ring` must be null or a live ring handle.
 */
uint64_t valring_ring_order(const ValringRing *ring);

/**
 * Residue field size q; 0 for a null handle.
 *
 * # Safety
 * `ring` must be null or a live ring handle.
 */
uint64_t valring_ring_residue_order(const ValringRing *ring);

/**
 * Length r of the valuation chain; 0 for a null handle.
 *
 * # Safety
 * `ring` must be null or a live ring handle.
 */
uint32_t valring_ring_length(const ValringRing *ring);

/**
 * Unit count q^r - q^(r-1); 0 for a null handle.
 *
 * # Safety
 * `ring` must be null or a live ring handle.
 */
uint64_t valring_ring_unit_count(const ValringRing *ring);

/**
 * Write the canonical spec string, NUL-terminated, into `buf`.
 *
 * # Safety
 * `ring` must be a live handle; `buf` must point to `cap` writable bytes.
 */
ValringStatus valring_ring_format(const ValringRing *ring, char *buf, uintptr_t cap);

/**
 * out = -x.
 *
 * # Safety
 * `ring` must be a live handle and `out` writable.
 */
ValringStatus valring_ring_neg(const ValringRing *ring, uint64_t x, uint64_t *out);

/**
 * out = x^-1 when x is a unit.
 *
 * # Safety
 * `ring` must be a live handle and `out` writable.
 */
ValringStatus valring_ring_inverse(const ValringRing *ring, uint64_t x, uint64_t *out);

/**
 * out = v(x), with v(0) = r by convention.
 *
 * # Safety
 * `ring` must be a live handle and `out` writable.
 */
ValringStatus valring_ring_valuation(const ValringRing *ring, uint64_t x, uint32_t *out);

/**
 * out = whether x is a unit.
 *
 * # Safety
 * `ring` must be a live handle and `out` writable.
 */
ValringStatus valring_ring_is_unit(const ValringRing *ring, uint64_t x, bool *out);

/**
 * Build the bipartite dot-product graph on projective d-classes.
 *
 * # Safety
 * `ring` must be a live handle and `out` writable.
 */
ValringStatus valring_graph_build(const ValringRing *ring,
                                  uintptr_t d,
                                  uint64_t part_cap,
                                  ValringGraph **out);

/**
 * Release a graph handle. Null is a no-op.
 *
 * # Safety
 * `g` must be null or a pointer from `valring_graph_build` not yet freed.
 */
void valring_graph_free(ValringGraph *g);

/**
 * Vertex count of one part; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
uint64_t valring_graph_part_size(const ValringGraph *g);

/**
 * Common vertex degree; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
uint64_t valring_graph_degree(const ValringGraph *g);

/**
 * out = whether classes i (left part) and j (right part) are orthogonal.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
ValringStatus valring_graph_has_edge(const ValringGraph *g, uint64_t i, uint64_t j, bool *out);

/**
 * Compute singular values and the spectral-gap verdict.
 *
 * # Safety
 * `g` must be a live graph handle and `out` writable.
 */
ValringStatus valring_graph_spectrum(const ValringGraph *g,
                                     bool use_jacobi,
                                     ValringSpectralReport *out);

/**
 * Check the mixing bound on explicit vertex index sets.
 *
 * # Safety
 * `g` must be a live graph handle; `x`/`y` must point to `x_len`/`y_len`
 * readable u64s (null only when the length is 0); `out` must be writable.
 */
ValringStatus valring_graph_mixing_check(const ValringGraph *g,
                                         double lambda3,
                                         const uint64_t *x,
                                         uintptr_t x_len,
                                         const uint64_t *y,
                                         uintptr_t y_len,
                                         ValringMixingRecord *out);

/**
 * Main incidence coefficient as an exact fraction num/den.
 *
 * # Safety
 * `ring` must be a live handle; `num` and `den` must be writable.
 */
ValringStatus valring_incidence_main_term(const ValringRing *ring, uint64_t *num, uint64_t *den);

/**
 * Check |BA+C| >= min(q^r, |A||B||C| / q^(2r-1)) / 2 on index sets.
 *
 * # Safety
 * `ring` must be a live handle; the three arrays must each have their
 * stated length (null only when empty); `out` must be writable.
 */
ValringStatus valring_theorem1_check(const ValringRing *ring,
                                     const uint64_t *a,
                                     uintptr_t a_len,
                                     const uint64_t *b,
                                     uintptr_t b_len,
                                     const uint64_t *c,
                                     uintptr_t c_len,
                                     ValringTheorem1Report *out);

/**
 * Collision energy of the product family of slopes x offsets, evaluated on A.
 *
 * # Safety
 * `ring` must be a live handle; the three arrays must each have their
 * stated length (null only when empty); `out` must be writable.
 */
ValringStatus valring_energy_product_lines(const ValringRing *ring,
                                           const uint64_t *slopes,
                                           uintptr_t slopes_len,
                                           const uint64_t *offsets,
                                           uintptr_t offsets_len,
                                           const uint64_t *a,
                                           uintptr_t a_len,
                                           ValringEnergyReport *out);

/**
 * Run the square-sumset energy chain on an index set.
 *
 * # Safety
 * `ring` must be a live handle; `a` must have the stated length (null only
 * when empty); `out` must be writable.
 */
ValringStatus valring_theorem2_check(const ValringRing *ring,
                                     const uint64_t *a,
                                     uintptr_t a_len,
                                     ValringTheorem2Report *out);

/**
 * Search for an iterated-sumset growth witness X inside A.
 *
 * # Safety
 * `ring` must be a live handle; `a` and `b` must have their stated lengths
 * (null only when empty); `out` must be writable.
 */
ValringStatus valring_plunnecke_verify(const ValringRing *ring,
                                       const uint64_t *a,
                                       uintptr_t a_len,
                                       const uint64_t *b,
                                       uintptr_t b_len,
                                       uint64_t delta_num,
                                       uint64_t delta_den,
                                       uint32_t k,
                                       ValringPlunneckeReport *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VALRING_H */
