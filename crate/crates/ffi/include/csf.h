#ifndef CSF_H
#define CSF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every entry point.
 */
typedef enum CsfStatus {
  CSF_STATUS_OK = 0,
  CSF_STATUS_NULL_POINTER = 1,
  CSF_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed edge list: bad line, loop, duplicate edge, vertex out of range.
   */
  CSF_STATUS_INVALID_INPUT = 3,
  /**
   * The graph is empty, disconnected or has a cycle.
   */
  CSF_STATUS_NOT_A_TREE = 4,
  CSF_STATUS_SIZE_MISMATCH = 5,
  CSF_STATUS_ISOMORPHIC = 6,
  CSF_STATUS_CAP_EXCEEDED = 7,
  CSF_STATUS_OVERFLOW = 8,
  CSF_STATUS_UNSUPPORTED_BASIS = 9,
  CSF_STATUS_INVALID_ARGUMENT = 10,
  CSF_STATUS_PANIC = 11,
} CsfStatus;

/**
 * Opaque symmetric function handle.
 */
typedef struct CsfSymFunc CsfSymFunc;

/**
 * Opaque tree handle.
 */
typedef struct CsfTree CsfTree;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *csf_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void csf_string_free(char *s);

/**
 * Parses an edge list (`u v` per line, optional `n <k>` header).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum CsfStatus csf_tree_from_edge_list(const char *text, struct CsfTree **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CsfStatus csf_tree_path(size_t n, struct CsfTree **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum CsfStatus csf_tree_star(size_t n, struct CsfTree **out);

/**
 * Spider with `len` legs of the given lengths.
 *
 * # Safety
 * `legs` must point to `len` readable values; `out` must be writable.
 */
enum CsfStatus csf_tree_spider(const size_t *legs, size_t len, struct CsfTree **out);

/**
 * # Safety
 * `t` must come from this library and not have been freed. NULL is ignored.
 */
void csf_tree_free(struct CsfTree *t);

/**
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum CsfStatus csf_tree_vertex_count(const struct CsfTree *t, size_t *out);

/**
 * Canonical code; equal for two trees exactly when they are isomorphic.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum CsfStatus csf_tree_canonical_code(const struct CsfTree *t, char **out);

/**
 * Independence number.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum CsfStatus csf_tree_alpha(const struct CsfTree *t, size_t *out);

/**
 * Leaf decomposition as JSON.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum CsfStatus csf_tree_decomposition_json(const struct CsfTree *t, char **out);

/**
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum CsfStatus csf_trees_isomorphic(const struct CsfTree *a, const struct CsfTree *b, bool *out);

/**
 * Whether the two trees have the same chromatic symmetric function.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum CsfStatus csf_trees_csf_equal(const struct CsfTree *a, const struct CsfTree *b, bool *out);

/**
 * Comparison report as JSON; `theorems` adds the criterion verdicts.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum CsfStatus csf_compare_json(const struct CsfTree *a,
                                const struct CsfTree *b,
                                bool theorems,
                                char **out);

/**
 * Survey of every tree pair on `n` vertices as JSON. `jobs = 0` uses all cores.
 *
 * # Safety
 * `out` must be writable.
 */
enum CsfStatus csf_survey_json(size_t n, size_t jobs, char **out);

/**
 * Expansion in the monomial basis.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum CsfStatus csf_symfunc_monomial(const struct CsfTree *t, struct CsfSymFunc **out);

/**
 * Expansion in the power-sum basis.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum CsfStatus csf_symfunc_powersum(const struct CsfTree *t, struct CsfSymFunc **out);

/**
 * Converts to the monomial basis, returning a new handle.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum CsfStatus csf_symfunc_to_monomial(const struct CsfSymFunc *f, struct CsfSymFunc **out);

/**
 * # Safety
 * `f` must come from this library and not have been freed. NULL is ignored.
 */
void csf_symfunc_free(struct CsfSymFunc *f);

/**
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum CsfStatus csf_symfunc_term_count(const struct CsfSymFunc *f, size_t *out);

/**
 * Longest partition with a nonzero monomial coefficient.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum CsfStatus csf_symfunc_max_block(const struct CsfSymFunc *f, size_t *out);

/**
 * Value at `x_1 = … = x_r = 1`, other variables 0. Fails with
 * `Overflow` when the value does not fit in 64 bits.
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum CsfStatus csf_symfunc_evaluate_ones(const struct CsfSymFunc *f, uint64_t r, int64_t *out);

/**
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum CsfStatus csf_symfunc_to_json(const struct CsfSymFunc *f, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CSF_H */
