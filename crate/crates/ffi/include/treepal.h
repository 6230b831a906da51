#ifndef TREEPAL_H
#define TREEPAL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Call outcome. Anything but Ok leaves the out parameters untouched.
 */
typedef enum TreepalStatus {
  TreepalStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  TreepalStatus_NullArgument = 1,
  /**
   * A text argument was not valid UTF-8.
   */
  TreepalStatus_InvalidUtf8 = 2,
  /**
   * The tree text did not parse; see treepal_last_error_message.
   */
  TreepalStatus_ParseFailed = 3,
  /**
   * A numeric argument violated a precondition, or an index was out
   * of range.
   */
  TreepalStatus_InvalidArgument = 4,
  /**
   * An internal invariant failed; see treepal_last_error_message.
   */
  TreepalStatus_Internal = 5,
} TreepalStatus;

/**
 * Opaque finished report; records sorted by (length, u, v).
 */
typedef struct TreepalReport TreepalReport;

/**
 * Opaque parsed tree with its cached query structures.
 */
typedef struct TreepalTree TreepalTree;

/**
 * One reported palindrome: its length and a witness node pair with
 * 1-based ids, matching the text format of the CLI.
 */
typedef struct TreepalTriple {
  uint32_t length;
  uint32_t u;
  uint32_t v;
} TreepalTriple;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread; empty when none. The
 * pointer stays valid until the next failing treepal call here.
 */
const char *treepal_last_error_message(void);

/**
 * Parses the text tree format (first line node count, then one
 * "u v label" line per edge, 1-based ids).
 */
enum TreepalStatus treepal_tree_parse(const char *text, struct TreepalTree **out);

/**
 * Builds a path of `edges` edges labeled by the tiled pattern.
 */
enum TreepalStatus treepal_tree_gen_path(uint32_t edges,
                                         const char *pattern,
                                         struct TreepalTree **out);

/**
 * Builds the comb family member for odd prime `p`.
 */
enum TreepalStatus treepal_tree_gen_comb(uint32_t p, struct TreepalTree **out);

/**
 * Builds a seeded random attachment tree with `edges` edges.
 */
enum TreepalStatus treepal_tree_gen_random(uint32_t edges,
                                           uint32_t sigma,
                                           uint64_t seed,
                                           struct TreepalTree **out);

/**
 * Releases a tree handle. Null is ignored.
 */
void treepal_tree_free(struct TreepalTree *t);

enum TreepalStatus treepal_tree_nodes(const struct TreepalTree *t, uint32_t *out);

enum TreepalStatus treepal_tree_edges(const struct TreepalTree *t, uint32_t *out);

/**
 * Reports all distinct palindromes. `threads` 0 runs sequentially,
 * anything else processes the decomposition family on that many
 * workers; the report is identical either way.
 */
enum TreepalStatus treepal_report(const struct TreepalTree *t,
                                  uint32_t threads,
                                  struct TreepalReport **out);

enum TreepalStatus treepal_report_len(const struct TreepalReport *r, uintptr_t *out);

/**
 * Copies record `index` into `out`.
 */
enum TreepalStatus treepal_report_get(const struct TreepalReport *r,
                                      uintptr_t index,
                                      struct TreepalTriple *out);

/**
 * Distinct palindromes per edge count to the power 1.5.
 */
enum TreepalStatus treepal_report_density(const struct TreepalReport *r, double *out);

/**
 * Releases a report handle. Null is ignored.
 */
void treepal_report_free(struct TreepalReport *r);

/**
 * Number of distinct palindromes; runs a full report internally.
 */
enum TreepalStatus treepal_count(const struct TreepalTree *t, uint64_t *out);

/**
 * Looks for a palindrome of length exactly `length`. Sets `*found`;
 * when found and `witness` is non-null, also fills the witness.
 */
enum TreepalStatus treepal_test(const struct TreepalTree *t,
                                uint32_t length,
                                bool *found,
                                struct TreepalTriple *witness);

/**
 * Finds a longest palindrome. `*found` is false only for an edgeless
 * tree.
 */
enum TreepalStatus treepal_longest(const struct TreepalTree *t,
                                   bool *found,
                                   struct TreepalTriple *witness);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TREEPAL_H */
