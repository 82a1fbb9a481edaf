#ifndef LATCON_H
#define LATCON_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LatconStatus {
  LATCON_STATUS_OK = 0,
  LATCON_STATUS_NULL_ARGUMENT = 1,
  LATCON_STATUS_INVALID_UTF8 = 2,
  LATCON_STATUS_PARSE = 3,
  LATCON_STATUS_CYCLE = 4,
  LATCON_STATUS_NOT_LATTICE = 5,
  LATCON_STATUS_INDEX = 6,
  LATCON_STATUS_SIZE = 7,
  LATCON_STATUS_UNKNOWN_FAMILY = 8,
  LATCON_STATUS_INTERNAL = 99,
} LatconStatus;

typedef enum LatconPlanarityMethod {
  // Forbidden-subposet test.
  LATCON_PLANARITY_METHOD_FORBIDDEN_SUBPOSET = 0,
  // Planarity of the cover graph plus a bottom-top edge.
  LATCON_PLANARITY_METHOD_COVER_GRAPH = 1,
} LatconPlanarityMethod;

// Opaque lattice handle.
typedef struct LatconLattice LatconLattice;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses the lattice text format (element count, then one `i j` pair per
// line).
//
// # Safety
// `text_in` must be a nul-terminated string and `out` a valid pointer.
enum LatconStatus latcon_lattice_parse(const char *text_in, struct LatconLattice **out);

// Builds a lattice from `pair_count` order pairs stored as
// `pairs[2k] < pairs[2k + 1]`.
//
// # Safety
// `pairs` must point to `2 * pair_count` values (it may be null when
// `pair_count` is 0) and `out` must be valid.
enum LatconStatus latcon_lattice_from_covers(size_t n,
                                             const size_t *pairs,
                                             size_t pair_count,
                                             struct LatconLattice **out);

// Standard lattices: `chain`, `boolean`, `mk` and `lfamily` take `param`;
// any other name is looked up among the forbidden lattices (`A_0`, `E_1`,
// ...), ignoring `param`.
//
// # Safety
// `family` must be a nul-terminated string and `out` valid.
enum LatconStatus latcon_make_family(const char *family, size_t param, struct LatconLattice **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `l` must come from this library and not be used afterwards.
void latcon_lattice_free(struct LatconLattice *l);

// Number of elements, or 0 for a null handle.
//
// # Safety
// `l` must be null or a live handle.
size_t latcon_lattice_size(const struct LatconLattice *l);

// Number of congruences. It never exceeds `2^63` for the supported sizes.
//
// # Safety
// `l` must be a live handle and `out` valid.
enum LatconStatus latcon_con_count(const struct LatconLattice *l, uint64_t *out);

// # Safety
// `l` must be a live handle and `out` valid.
enum LatconStatus latcon_is_planar(const struct LatconLattice *l,
                                   enum LatconPlanarityMethod method,
                                   bool *out);

// # Safety
// `l` must be a live handle and `out` valid.
enum LatconStatus latcon_is_dismantlable(const struct LatconLattice *l, bool *out);

// Whether the lattice has more than `2^(n-5)` congruences.
//
// # Safety
// `l` must be a live handle and `out` valid.
enum LatconStatus latcon_has_many_congruences(const struct LatconLattice *l, bool *out);

// DOT text of the Hasse diagram; free with `latcon_string_free`.
//
// # Safety
// `l` must be a live handle and `out` valid.
enum LatconStatus latcon_lattice_to_dot(const struct LatconLattice *l, char **out);

// The lattice in the text format; free with `latcon_string_free`.
//
// # Safety
// `l` must be a live handle and `out` valid.
enum LatconStatus latcon_lattice_serialize(const struct LatconLattice *l, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be used afterwards.
void latcon_string_free(char *s);

// Message for the last failed call on this thread; empty after a
// success. Valid until the next library call on the same thread.
const char *latcon_last_error(void);

// Static name of a status code.
const char *latcon_status_name(enum LatconStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LATCON_H */
