/*
 * subarr C API: mod-2 cohomology of real linear subspace arrangement
 * complements.
 *
 * All functions return a subarr_status; every out-parameter is written only
 * on SUBARR_OK unless stated otherwise (subarr_verify still writes the
 * report on SUBARR_ERROR_VERIFY so the mismatch witness is available).
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with subarr_string_free. Handles are opaque and freed
 * with their matching *_free call. subarr_last_error describes the most
 * recent failure on the calling thread.
 */
#ifndef SUBARR_H
#define SUBARR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum subarr_status {
    SUBARR_OK = 0,
    SUBARR_ERROR_INPUT = 1,  /* malformed or invalid input */
    SUBARR_ERROR_CAP = 2,    /* a configured resource cap was exceeded */
    SUBARR_ERROR_VERIFY = 3  /* verification mismatch or consistency error */
} subarr_status;

typedef struct subarr_arrangement subarr_arrangement;

typedef struct subarr_options {
    long max_atoms;       /* default 24 */
    long max_poset_nodes; /* default 200000 */
    long max_block_dim;   /* total enumerated atom subsets, default 5000000 */
    long audit_samples;   /* coboundary perturbations per class, default 100 */
    int threads;          /* 0 = machine width */
} subarr_options;

/* Fills in the default values above. */
void subarr_options_init(subarr_options* opts);

/* Generators. opts may be NULL (defaults). */
subarr_status subarr_arrangement_orbit_config(int m, int n,
                                              const subarr_options* opts,
                                              subarr_arrangement** out);
subarr_status subarr_arrangement_diagonal(int k, int n,
                                          const subarr_options* opts,
                                          subarr_arrangement** out);

/* Arrangement document I/O (schema described in the project README). */
subarr_status subarr_arrangement_parse(const char* json_text,
                                       const subarr_options* opts,
                                       subarr_arrangement** out);
subarr_status subarr_arrangement_to_json(const subarr_arrangement* arr,
                                         char** out_json);

int subarr_arrangement_atom_count(const subarr_arrangement* arr);
int subarr_arrangement_ambient_dim(const subarr_arrangement* arr);

void subarr_arrangement_free(subarr_arrangement* arr);

/* Pipeline reports, emitted as JSON documents. */
subarr_status subarr_poset_report(const subarr_arrangement* arr,
                                  const subarr_options* opts, char** out_json);
subarr_status subarr_betti_report(const subarr_arrangement* arr,
                                  const subarr_options* opts, char** out_json);
subarr_status subarr_ring_report(const subarr_arrangement* arr,
                                 const subarr_options* opts, char** out_json);
subarr_status subarr_oracle_report(const subarr_arrangement* arr,
                                   const subarr_options* opts, char** out_json);

/*
 * Runs both pipelines, the ring audits and the comparison. Returns SUBARR_OK
 * when every check passes and SUBARR_ERROR_VERIFY when the report says
 * "mismatch" (the report is written either way).
 */
subarr_status subarr_verify(const subarr_arrangement* arr,
                            const subarr_options* opts, char** out_json);

/* Renders any report JSON as a human-readable summary. */
subarr_status subarr_render_text(const char* report_json, char** out_text);

void subarr_string_free(char* text);

/* Message for the last failing call on this thread ("" when none). */
const char* subarr_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* SUBARR_H */
