/* C interface of the probabilistic-method toolkit. */

#ifndef PMTK_H
#define PMTK_H

/* Generated from the pmtk-ffi crate by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum PmtkStatus {
  // The call succeeded and all `out` parameters are filled in.
  PMTK_STATUS_OK = 0,
  // A required pointer argument was NULL.
  PMTK_STATUS_NULL_ARGUMENT = 1,
  // An argument violated a precondition; see `pmtk_last_error`.
  PMTK_STATUS_INVALID_INPUT = 2,
  // The computation would blow past a resource cap; see `pmtk_last_error`.
  PMTK_STATUS_RESOURCE_LIMIT = 3,
  // An internal invariant failed; see `pmtk_last_error`.
  PMTK_STATUS_PANICKED = 4,
} PmtkStatus;

// Three-valued comparison verdict: sound answers or an explicit abstention.
typedef enum PmtkVerdict {
  PMTK_VERDICT_FALSE = 0,
  PMTK_VERDICT_TRUE = 1,
  PMTK_VERDICT_INDETERMINATE = 2,
} PmtkVerdict;

// Opaque set-system handle (a family of subsets of a finite universe).
typedef struct PmtkSetSystem PmtkSetSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version of the toolkit, as a static string; do not free.
const char *pmtk_version(void);

// Message for the most recent failure on this thread, or NULL if the last
// call succeeded. The caller owns the returned copy (release it with
// `pmtk_string_free`).
char *pmtk_last_error(void);

// Releases a string returned by this library. NULL is a no-op.
//
// # Safety
// `s` must be a pointer previously returned by a `pmtk_*` call that hands
// ownership to the caller, and must not be used after this call.
void pmtk_string_free(char *s);

// Largest vertex count r = 2^floor((n-2)/2) with a guaranteed graph free of
// n-cliques and n-anticliques, as a JSON number document (exact digits when
// printable, directed log2 bounds otherwise).
//
// # Safety
// `out_json` must be valid for a write; the result is released with
// `pmtk_string_free`.
enum PmtkStatus pmtk_ramsey_bound_json(uint64_t n, char **out_json);

// Same guarantee for k-colorings of complete-graph edges: k^floor((n-2)/2).
//
// # Safety
// As for `pmtk_ramsey_bound_json`.
enum PmtkStatus pmtk_multicolor_bound_json(uint64_t n, uint64_t k, char **out_json);

// Same guarantee for k-colorings of l-element subsets:
// k^floor((n-l+1)^(l-1)/l!).
//
// # Safety
// As for `pmtk_ramsey_bound_json`.
enum PmtkStatus pmtk_hyper_bound_json(uint64_t n, uint64_t k, uint64_t l, char **out_json);

// Smallest positive a with 2^(a^2) >= (2s)^(2n).
//
// # Safety
// `out_a` must be valid for a write.
enum PmtkStatus pmtk_discrepancy_guarantee(uint64_t n, uint64_t s, uint64_t *out_a);

// Whether 2^(a^2) >= (2s)^(2n), decided exactly.
//
// # Safety
// `out_holds` must be valid for a write.
enum PmtkStatus pmtk_discrepancy_condition_holds(uint64_t n,
                                                 uint64_t s,
                                                 uint64_t a,
                                                 bool *out_holds);

// Verdict of "graphs on r vertices with an n-clique or n-anticlique are a
// strict minority" — TRUE certifies a witness graph exists.
//
// # Safety
// `out_verdict` must be valid for a write.
enum PmtkStatus pmtk_ramsey_bad_verdict(uint64_t r, uint64_t n, enum PmtkVerdict *out_verdict);

// Verdict of the analogous minority claim for 2-colorings of l-subsets of
// [m] and monochromatic n-hypercliques.
//
// # Safety
// `out_verdict` must be valid for a write.
enum PmtkStatus pmtk_hyper_bad_verdict(uint64_t m,
                                       uint64_t n,
                                       uint64_t l,
                                       enum PmtkVerdict *out_verdict);

// Parses a "pmtk/1" set-system document into a handle.
//
// # Safety
// `json` must be a valid NUL-terminated string; `out_sys` must be valid for
// a write. Release the handle with `pmtk_set_system_free`.
enum PmtkStatus pmtk_set_system_parse(const char *json, struct PmtkSetSystem **out_sys);

// Samples s clubs of `club_size` distinct members each from a universe of n
// people, seeded and reproducible.
//
// # Safety
// `out_sys` must be valid for a write. Release the handle with
// `pmtk_set_system_free`.
enum PmtkStatus pmtk_set_system_clubs(uint64_t n,
                                      uint64_t s,
                                      uint64_t club_size,
                                      uint64_t seed,
                                      struct PmtkSetSystem **out_sys);

// Universe size of the system; 0 for NULL.
//
// # Safety
// `sys` must be NULL or a live handle from this library.
uint64_t pmtk_set_system_n(const struct PmtkSetSystem *sys);

// Number of member sets; 0 for NULL.
//
// # Safety
// `sys` must be NULL or a live handle from this library.
uint64_t pmtk_set_system_len(const struct PmtkSetSystem *sys);

// Serializes the system back to its "pmtk/1" document.
//
// # Safety
// `sys` must be a live handle; `out_json` must be valid for a write; the
// result is released with `pmtk_string_free`.
enum PmtkStatus pmtk_set_system_to_json(const struct PmtkSetSystem *sys, char **out_json);

// Releases a set-system handle. NULL is a no-op.
//
// # Safety
// `sys` must be a pointer from `pmtk_set_system_parse`/`pmtk_set_system_clubs`
// and must not be used after this call.
void pmtk_set_system_free(struct PmtkSetSystem *sys);

// Exact count of sign colorings with |delta| >= a on at least one member
// set, as a decimal string. Enumeration walks all 2^n colorings; `force`
// raises the practicality cap from 2^28 to 2^63.
//
// # Safety
// `sys` must be a live handle; `out_count` must be valid for a write; the
// result is released with `pmtk_string_free`.
enum PmtkStatus pmtk_count_exceeding_decimal(const struct PmtkSetSystem *sys,
                                             uint64_t a,
                                             bool force,
                                             char **out_count);

// Exact optimum min over all colorings of max |delta|, with the first
// optimal coloring as a "pmtk/1" document when `out_witness_json` is
// non-NULL.
//
// # Safety
// `sys` must be a live handle; `out_optimum` must be valid for a write;
// `out_witness_json` may be NULL to skip the witness, otherwise it must be
// valid for a write and the result is released with `pmtk_string_free`.
enum PmtkStatus pmtk_exact_discrepancy(const struct PmtkSetSystem *sys,
                                       bool force,
                                       uint64_t *out_optimum,
                                       char **out_witness_json);

// Exact count of graphs on r labeled vertices containing an n-clique or an
// n-anticlique. Enumeration walks all 2^(r(r-1)/2) graphs; `force` raises
// the cap from 2^30 to 2^63.
//
// # Safety
// `out_count` must be valid for a write.
enum PmtkStatus pmtk_count_ramsey_graphs(uint32_t r, uint32_t n, bool force, uint64_t *out_count);

// Seeded search for a sign coloring with |delta| < a on every member set.
// `a = 0` means "use the guarantee threshold for this system";
// `max_trials = 0` means the default budget of 1000. Exhausting the budget
// is not an error: the report's `success_trial` is absent and `failures`
// lists the first rejections.
//
// # Safety
// `sys` must be a live handle; `out_report_json` must be valid for a write;
// the result is released with `pmtk_string_free`.
enum PmtkStatus pmtk_find_low_discrepancy_json(const struct PmtkSetSystem *sys,
                                               uint64_t a,
                                               uint64_t seed,
                                               uint64_t max_trials,
                                               char **out_report_json);

// Seeded search for a graph on r vertices with no n-clique and no
// n-anticlique. `r = 0` means "use the guaranteed bound 2^floor((n-2)/2)";
// `max_trials = 0` means the default budget of 1000.
//
// # Safety
// `out_report_json` must be valid for a write; the result is released with
// `pmtk_string_free`.
enum PmtkStatus pmtk_find_ramsey_graph_json(uint64_t n,
                                            uint64_t r,
                                            uint64_t seed,
                                            uint64_t max_trials,
                                            char **out_report_json);

// Checks a "pmtk/1" graph document against the claim "no n-clique and no
// n-anticlique". `out_ok` gets the verdict; `out_reason` (optional) gets the
// first violated constraint or a summary of what was checked.
//
// # Safety
// `graph_json` must be a valid NUL-terminated string; `out_ok` must be valid
// for a write; `out_reason` may be NULL, otherwise it must be valid for a
// write and the result is released with `pmtk_string_free`.
enum PmtkStatus pmtk_verify_ramsey_json(const char *graph_json,
                                        uint64_t n,
                                        bool *out_ok,
                                        char **out_reason);

// Checks a "pmtk/1" sign-coloring document against a set system and the
// claim "every member set has |delta| < a".
//
// # Safety
// `coloring_json` must be a valid NUL-terminated string; `sys` must be a
// live handle; `out_ok` must be valid for a write; `out_reason` may be NULL,
// otherwise it must be valid for a write and the result is released with
// `pmtk_string_free`.
enum PmtkStatus pmtk_verify_coloring_json(const char *coloring_json,
                                          const struct PmtkSetSystem *sys,
                                          uint64_t a,
                                          bool *out_ok,
                                          char **out_reason);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PMTK_H */
