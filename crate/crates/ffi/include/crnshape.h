#ifndef CRNSHAPE_H
#define CRNSHAPE_H

/* Generated by cbindgen from crnshape-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a crnshape call.
typedef enum CrnStatus {
  CRN_STATUS_OK = 0,
  CRN_STATUS_NULL_POINTER = 1,
  CRN_STATUS_PARSE_ERROR = 2,
  CRN_STATUS_UNSUPPORTED = 3,
  CRN_STATUS_INVALID_ARGUMENT = 4,
  CRN_STATUS_UTF8_ERROR = 5,
} CrnStatus;

// Opaque handle to a parsed reaction network.
typedef struct CrnNetwork CrnNetwork;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent error on this thread, or NULL.
// The pointer stays valid until the next crnshape call on the thread.
const char *crn_last_error_message(void);

// Parse a network from the reaction text format.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a valid pointer.
enum CrnStatus crn_network_parse(const char *text, struct CrnNetwork **out);

// Release a network handle. NULL is ignored.
//
// # Safety
// `net` must have come from [`crn_network_parse`] and not been freed.
void crn_network_free(struct CrnNetwork *net);

// Release a string returned by this library. NULL is ignored.
//
// # Safety
// `text` must have been returned by a crnshape call and not been freed.
void crn_string_free(char *text);

// Number of species in the network.
//
// # Safety
// `net` and `out` must be valid pointers.
enum CrnStatus crn_network_species_count(const struct CrnNetwork *net, size_t *out);

// Number of reactions in the network.
//
// # Safety
// `net` and `out` must be valid pointers.
enum CrnStatus crn_network_reaction_count(const struct CrnNetwork *net, size_t *out);

// Canonical serialization of the network's isomorphism class, reactions
// joined by `, `.
//
// # Safety
// `net` and `out` must be valid pointers.
enum CrnStatus crn_network_canonical(const struct CrnNetwork *net, char **out);

// Full analysis report as a JSON document.
//
// `rates` may be NULL for a symbolic-only report; otherwise it must hold
// one positive value per reaction and the report gains an oracle section.
// With `verify` set the oracle also samples the variety and fits the class.
//
// # Safety
// `net` and `out` must be valid; `rates`, when non-NULL, must point to
// `n_rates` doubles.
enum CrnStatus crn_analyze_json(const struct CrnNetwork *net,
                                const double *rates,
                                size_t n_rates,
                                bool verify,
                                uint64_t seed,
                                char **out);

// Variety class of a 2-species, 2-reaction network as a code for
// [`crn_variety_class_name`].
//
// # Safety
// `net` and `out` must be valid pointers.
enum CrnStatus crn_variety_class(const struct CrnNetwork *net, int32_t *out);

// Static name for a class code from [`crn_variety_class`]; NULL if the
// code is out of range.
const char *crn_variety_class_name(int32_t code);

// All genuine 2-species, 2-reaction networks up to isomorphism at the
// given molecularity bound, one canonical serialization per line.
//
// # Safety
// `out` must be a valid pointer.
enum CrnStatus crn_enumerate(uint32_t max_molecularity, char **out);

// Census of variety classes at the given molecularity bound, as JSON.
//
// # Safety
// `out` must be a valid pointer.
enum CrnStatus crn_census_json(uint32_t max_molecularity, char **out);

// Sample points on the positive steady-state variety as CSV (header plus
// one row per point). Fails with `CRN_STATUS_UNSUPPORTED` when the PSSV is
// empty or rate-dependent.
//
// # Safety
// `net` and `out` must be valid; `rates`, when non-NULL, must point to
// `n_rates` doubles.
enum CrnStatus crn_sample_csv(const struct CrnNetwork *net,
                              const double *rates,
                              size_t n_rates,
                              size_t samples,
                              uint64_t seed,
                              char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CRNSHAPE_H */
