/* SPDX-License-Identifier: Apache-2.0 */

#ifndef BISOFT_H
#define BISOFT_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BisoftAxiom {
  BISOFT_AXIOM_SOFT_T0_FIRST = 0,
  BISOFT_AXIOM_SOFT_T0_SECOND = 1,
  BISOFT_AXIOM_SOFT_T0_SUP = 2,
  BISOFT_AXIOM_SOFT_T1_FIRST = 3,
  BISOFT_AXIOM_SOFT_T1_SECOND = 4,
  BISOFT_AXIOM_SOFT_T1_SUP = 5,
  BISOFT_AXIOM_SOFT_T2_FIRST = 6,
  BISOFT_AXIOM_SOFT_T2_SECOND = 7,
  BISOFT_AXIOM_SOFT_T2_SUP = 8,
  BISOFT_AXIOM_PAIRWISE_T0 = 9,
  BISOFT_AXIOM_PAIRWISE_T0_STRICT = 10,
  BISOFT_AXIOM_PAIRWISE_T1 = 11,
  BISOFT_AXIOM_PAIRWISE_T2 = 12,
  BISOFT_AXIOM_STRONG_T0 = 13,
  BISOFT_AXIOM_STRONG_T1 = 14,
  BISOFT_AXIOM_HAUSDORFF_CHAR = 15,
} BisoftAxiom;

typedef enum BisoftStatus {
  BISOFT_STATUS_OK = 0,
  BISOFT_STATUS_NULL_POINTER = 1,
  BISOFT_STATUS_INVALID_UTF8 = 2,
  BISOFT_STATUS_PARSE = 3,
  BISOFT_STATUS_UNKNOWN_NAME = 4,
  BISOFT_STATUS_INVALID_TOPOLOGY = 5,
  BISOFT_STATUS_UNKNOWN_CLAIM = 6,
  BISOFT_STATUS_CONFIG = 7,
  BISOFT_STATUS_PANIC = 8,
} BisoftStatus;

/**
 * A parsed and resolved fixture document.
 */
typedef struct BisoftFixture BisoftFixture;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. Valid
 * until the next call on this thread.
 */
const char *bisoft_last_error(void);

/**
 * Static version string.
 */
const char *bisoft_version(void);

/**
 * Parses and resolves a JSON fixture document.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum BisoftStatus bisoft_fixture_parse(const char *json, struct BisoftFixture **out);

/**
 * # Safety
 * `fx` must come from `bisoft_fixture_parse` and not be freed twice.
 */
void bisoft_fixture_free(struct BisoftFixture *fx);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void bisoft_string_free(char *s);

/**
 * Validates every named topology. `*all_valid` is false when any fails;
 * the first failure is left in `bisoft_last_error`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum BisoftStatus bisoft_fixture_validate(const struct BisoftFixture *fx, bool *all_valid);

/**
 * Evaluates one axiom on a named space.
 *
 * # Safety
 * Pointers must be valid; `space` nul-terminated.
 */
enum BisoftStatus bisoft_check_axiom(const struct BisoftFixture *fx,
                                     const char *space,
                                     enum BisoftAxiom axiom,
                                     bool *holds);

/**
 * The full axiom report of a space as JSON.
 *
 * # Safety
 * Pointers must be valid; `space` nul-terminated.
 */
enum BisoftStatus bisoft_axioms_json(const struct BisoftFixture *fx,
                                     const char *space,
                                     bool strict_orientation,
                                     char **out);

/**
 * Members of the supremum topology, in canonical order, as a JSON array.
 *
 * # Safety
 * Pointers must be valid; `space` nul-terminated.
 */
enum BisoftStatus bisoft_sup_json(const struct BisoftFixture *fx, const char *space, char **out);

/**
 * Rough regions of a named soft set. A null `target` uses the document
 * target.
 *
 * # Safety
 * Pointers must be valid; strings nul-terminated.
 */
enum BisoftStatus bisoft_rough_json(const struct BisoftFixture *fx,
                                    const char *space,
                                    const char *target,
                                    char **out);

/**
 * Searches for a counterexample to a claim. `random_count == 0` selects
 * exhaustive mode. `*found` reports whether one was found; `*out` receives
 * the record as JSON, or null. `*refutes_expected` is true when the claim
 * was expected to hold and a counterexample was found.
 *
 * # Safety
 * Pointers must be valid; `claim` nul-terminated. `out` may be null.
 */
enum BisoftStatus bisoft_find_counterexample(const char *claim,
                                             size_t max_x,
                                             size_t params,
                                             size_t random_count,
                                             uint64_t seed,
                                             bool *found,
                                             bool *refutes_expected,
                                             char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BISOFT_H */
