#ifndef SEQCALC_H
#define SEQCALC_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a library call. The numbering follows the CLI exit codes.
typedef enum SeqcalcStatus {
  SEQCALC_STATUS_OK = 0,
  // The proof does not check / is not tractable / search exhausted /
  // the routes differ.
  SEQCALC_STATUS_FALSE = 1,
  SEQCALC_STATUS_PARSE_ERROR = 2,
  SEQCALC_STATUS_FUEL_EXHAUSTED = 3,
  // Unknown calculus, logic or edge name, or an unsupported operation.
  SEQCALC_STATUS_INVALID_ARGUMENT = 4,
  SEQCALC_STATUS_NULL_POINTER = 5,
  // A translation or reduction failed internally.
  SEQCALC_STATUS_INTERNAL = 6,
} SeqcalcStatus;

// An unchecked proof tree.
typedef struct SeqcalcProof SeqcalcProof;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread (empty if none). The
// pointer stays valid until the next failing call on the same thread.
const char *seqcalc_last_error(void);

// Parses a proof in the file format over the formulas of `logic`
// (`cl`, `il`, `cll`, `ill`, `ille`, `ile`, `cll-minus`).
//
// # Safety
// `src` and `logic` must be NUL-terminated strings; `out` must be writable.
enum SeqcalcStatus seqcalc_proof_parse(const char *src,
                                       const char *logic,
                                       struct SeqcalcProof **out);

// Releases a proof handle; null is ignored.
//
// # Safety
// `p` must come from this library and not have been freed.
void seqcalc_proof_free(struct SeqcalcProof *p);

// The proof in the file format; free with `seqcalc_string_free`.
//
// # Safety
// `p` must be a live handle or null (which yields null).
char *seqcalc_proof_to_string(const struct SeqcalcProof *p);

// # Safety
// `s` must come from this library and not have been freed.
void seqcalc_string_free(char *s);

// Checks a proof in `calculus` (`lk`, `lj`, `ilc`, `ilc-iota`, `ilc-rho`, ...).
// On success writes the end sequent (free with `seqcalc_string_free`) to
// `sequent` if it is non-null. A proof that does not check yields `False`.
//
// # Safety
// `p` must be a live handle, `calculus` a NUL-terminated string.
enum SeqcalcStatus seqcalc_check(const struct SeqcalcProof *p,
                                 const char *calculus,
                                 char **sequent);

// Translates a proof along an edge (`lk-inc`, `inc-ilc`, `lk-clc`,
// `clc-ilc`, `lk-ilc-n`, `lk-ilc-v`, `llj-ilc`, `lj-inc`).
//
// # Safety
// `p` must be a live handle, `edge` a NUL-terminated string, `out` writable.
enum SeqcalcStatus seqcalc_translate(const struct SeqcalcProof *p,
                                     const char *edge,
                                     struct SeqcalcProof **out);

// Eliminates the cuts of a proof in an ILC-family calculus, INC or CLC
// within `fuel` reduction steps (0 selects the default).
//
// # Safety
// `p` must be a live handle, `calculus` a NUL-terminated string, `out` writable.
enum SeqcalcStatus seqcalc_eliminate_cuts(const struct SeqcalcProof *p,
                                          const char *calculus,
                                          uintptr_t fuel,
                                          struct SeqcalcProof **out);

// Whether a proof that checks in the parent calculus is tractable for the
// ρ-calculus `calculus`. `clause` (if non-null) receives the violated
// clause: 1 for `?!R`, 2 for cut purity, 0 when tractable.
//
// # Safety
// `p` must be a live handle, `calculus` a NUL-terminated string.
enum SeqcalcStatus seqcalc_is_tractable(const struct SeqcalcProof *p,
                                        const char *calculus,
                                        uint8_t *clause);

// Whether the two translations of an LK proof into ILC_ι agree up to
// permutations; a divergence is described by `seqcalc_last_error`.
//
// # Safety
// `p` must be a live handle.
enum SeqcalcStatus seqcalc_commute(const struct SeqcalcProof *p);

// Bounded cut-free search for `sequent` (e.g. `"!?X |- ?!X"`). `Ok` with
// a proof in `out`, or `False` when the bound is exhausted.
//
// # Safety
// `sequent` and `calculus` must be NUL-terminated strings, `out` writable.
enum SeqcalcStatus seqcalc_search(const char *sequent,
                                  const char *calculus,
                                  uintptr_t depth,
                                  uint8_t contraction_budget,
                                  struct SeqcalcProof **out);

// Rank of a formula of `logic`.
//
// # Safety
// `formula` and `logic` must be NUL-terminated strings, `rank` writable.
enum SeqcalcStatus seqcalc_formula_rank(const char *formula, const char *logic, uintptr_t *rank);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEQCALC_H */
