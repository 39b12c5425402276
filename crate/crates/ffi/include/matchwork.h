#ifndef MATCHWORK_H
#define MATCHWORK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MwStatus {
  MW_STATUS_OK = 0,
  /*
   A required pointer argument was null.
   */
  MW_STATUS_NULL_POINTER = 1,
  /*
   Malformed input: bad word, invalid edges, bad parameters.
   */
  MW_STATUS_INVALID_INPUT = 2,
  /*
   Well-formed input violating a precondition or size guard.
   */
  MW_STATUS_CONTRACT_VIOLATION = 3,
  /*
   The library panicked; this is a bug.
   */
  MW_STATUS_PANIC = 4,
  /*
   The output buffer is smaller than required.
   */
  MW_STATUS_BUFFER_TOO_SMALL = 5,
} MwStatus;

typedef enum MwRelation {
  MW_RELATION_ALIGNMENT = 0,
  MW_RELATION_NESTING = 1,
  MW_RELATION_CROSSING = 2,
} MwRelation;

typedef enum MwShape {
  MW_SHAPE_LINE = 0,
  MW_SHAPE_STACK = 1,
  MW_SHAPE_WAVE = 2,
} MwShape;

/*
 An ordered matching.
 */
typedef struct MwMatching MwMatching;

/*
 r-twins of some host.
 */
typedef struct MwTwinSet MwTwinSet;

/*
 A homogeneous sub-matching of some host.
 */
typedef struct MwWitness MwWitness;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message describing the last failure on this thread, or "" if none.
 Valid until the next failing call on the same thread.
 */
const char *mw_last_error_message(void);

/*
 Parses a double-occurrence word (`"ABAB"` or `"A1 B1 A1 B1"`).

 # Safety
 `word` must be a nul-terminated string; `out` must be writable.
 */
enum MwStatus mw_matching_parse(const char *word, struct MwMatching **out);

/*
 Builds a matching from `n_edges` endpoint pairs stored flat in `pairs`.

 # Safety
 `pairs` must hold `2 * n_edges` values (may be null when `n_edges == 0`).
 */
enum MwStatus mw_matching_from_edges(const uint32_t *pairs,
                                     size_t n_edges,
                                     struct MwMatching **out);

/*
 # Safety
 `m` must be null or a handle not yet freed.
 */
void mw_matching_free(struct MwMatching *m);

/*
 Number of edges; 0 for a null handle.

 # Safety
 `m` must be null or a live handle.
 */
size_t mw_matching_size(const struct MwMatching *m);

/*
 Writes the edges as `left, right` pairs into `out` (room for
 `capacity_edges` edges, i.e. `2 * capacity_edges` values).

 # Safety
 `m` must be a live handle; `out` must hold `2 * capacity_edges` values.
 */
enum MwStatus mw_matching_edges(const struct MwMatching *m, uint32_t *out, size_t capacity_edges);

/*
 Word form of the matching; release with [`mw_string_free`].

 # Safety
 `m` must be a live handle; `out` must be writable.
 */
enum MwStatus mw_matching_to_word(const struct MwMatching *m, char **out);

/*
 # Safety
 `s` must be null or a string returned by this library.
 */
void mw_string_free(char *s);

/*
 Relation of the edges `{a1, b1}` and `{a2, b2}`.

 # Safety
 `out` must be writable.
 */
enum MwStatus mw_classify_pair(uint32_t a1,
                               uint32_t b1,
                               uint32_t a2,
                               uint32_t b2,
                               enum MwRelation *out);

/*
 Largest line, stack or wave of `m`.

 # Safety
 `m` must be a live handle; `out` must be writable.
 */
enum MwStatus mw_largest(const struct MwMatching *m, enum MwShape shape, struct MwWitness **out);

/*
 A line larger than `l`, a stack larger than `s` or a wave larger than
 `w`; needs at least `l·s·w + 1` edges.

 # Safety
 `m` must be a live handle; `out` must be writable.
 */
enum MwStatus mw_es_witness(const struct MwMatching *m,
                            uint64_t l,
                            uint64_t s,
                            uint64_t w,
                            struct MwWitness **out);

/*
 # Safety
 `w` must be a live handle.
 */
enum MwShape mw_witness_kind(const struct MwWitness *w);

/*
 # Safety
 `w` must be null or a live handle.
 */
size_t mw_witness_size(const struct MwWitness *w);

/*
 Indices of the witness edges in the host's edge list (ascending).

 # Safety
 `w` must be a live handle; `out` must hold `capacity` values.
 */
enum MwStatus mw_witness_indices(const struct MwWitness *w, size_t *out, size_t capacity);

/*
 # Safety
 `w` must be null or a handle not yet freed.
 */
void mw_witness_free(struct MwWitness *w);

/*
 Uniform random matching of size `n` (online scheme) from `seed`.

 # Safety
 `out` must be writable.
 */
enum MwStatus mw_sample_uniform(size_t n, uint64_t seed, struct MwMatching **out);

/*
 Uniform random matching of size `n` by pairing a shuffled `1..=2n`.

 # Safety
 `out` must be writable.
 */
enum MwStatus mw_sample_via_permutation(size_t n, uint64_t seed, struct MwMatching **out);

/*
 r-twins from the block construction with default block size.
 `exact_matching` selects maximum instead of greedy auxiliary matching.

 # Safety
 `m` must be a live handle; `out` must be writable.
 */
enum MwStatus mw_block_twins(const struct MwMatching *m,
                             size_t r,
                             bool exact_matching,
                             struct MwTwinSet **out);

/*
 # Safety
 `t` must be null or a live handle.
 */
size_t mw_twins_r(const struct MwTwinSet *t);

/*
 Edges per sub-matching.

 # Safety
 `t` must be null or a live handle.
 */
size_t mw_twins_size(const struct MwTwinSet *t);

/*
 Host edge indices of sub-matching `h` (ascending).

 # Safety
 `t` must be a live handle; `out` must hold `capacity` values.
 */
enum MwStatus mw_twins_sub(const struct MwTwinSet *t, size_t h, size_t *out, size_t capacity);

/*
 # Safety
 `t` must be null or a handle not yet freed.
 */
void mw_twins_free(struct MwTwinSet *t);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MATCHWORK_H */
