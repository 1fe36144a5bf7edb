/* C interface to the sharpgpt library.
 *
 * Systems are opaque handles created from a kind name or a theory JSON
 * descriptor. Elements travel as plain double buffers of length
 * sharp_system_dim() in the documented coordinate bases; frames as
 * rank * dim buffers, member i at offset i * dim; square matrices as
 * dim * dim row-major buffers.
 *
 * Every function returns SHARP_OK on success. On failure the returned status
 * classifies the error and sharp_last_error() carries a thread-local message.
 */
#ifndef SHARPGPT_H
#define SHARPGPT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sharp_status {
    SHARP_OK = 0,
    SHARP_ERR_ARGUMENT = 1, /* invalid argument or contract violation */
    SHARP_ERR_PARSE = 2,    /* malformed descriptor text */
    SHARP_ERR_NUMERIC = 3   /* numeric failure (solver budget, reconstruction) */
} sharp_status;

typedef struct sharp_system sharp_system;

const char* sharp_version(void);
const char* sharp_last_error(void);

/* kind is one of classical | real_symmetric | complex_hermitian |
 * quaternionic_hermitian | spin_factor; size is d, n, or m. */
sharp_status sharp_system_create(const char* kind, int size, sharp_system** out);
sharp_status sharp_system_create_json(const char* theory_json, sharp_system** out);
void sharp_system_destroy(sharp_system* sys);

int sharp_system_rank(const sharp_system* sys);
int sharp_system_dim(const sharp_system* sys);
const char* sharp_system_kind(const sharp_system* sys);

/* ---- element operations (buffers of length dim unless noted) ---- */

sharp_status sharp_unit(const sharp_system* sys, double* out);
sharp_status sharp_invariant_state(const sharp_system* sys, double* out);
sharp_status sharp_jordan_product(const sharp_system* sys, const double* x, const double* y,
                                  double* out);
sharp_status sharp_quadratic_rep(const sharp_system* sys, const double* a, const double* x,
                                 double* out);
sharp_status sharp_trace_inner_product(const sharp_system* sys, const double* x,
                                       const double* y, double* out);
/* eigenvalues_out has length rank, descending */
sharp_status sharp_eigenvalues(const sharp_system* sys, const double* x,
                               double* eigenvalues_out);
/* frame_out is rank * dim */
sharp_status sharp_spectral_decompose(const sharp_system* sys, const double* x, double tol,
                                      double* eigenvalues_out, double* frame_out);
sharp_status sharp_cone_contains(const sharp_system* sys, const double* x, double tol,
                                 int* out);
sharp_status sharp_operational_norm(const sharp_system* sys, const double* x, double* out);
sharp_status sharp_dagger_norm(const sharp_system* sys, const double* x, double* out);
sharp_status sharp_impurity(const sharp_system* sys, const double* rho, double* out);
sharp_status sharp_dagger_fidelity(const sharp_system* sys, const double* rho,
                                   const double* sigma, double* out);

/* ---- frames, projectors, interference ---- */

sharp_status sharp_random_frame(const sharp_system* sys, uint64_t seed, double* frame_out);
/* subset holds 0-based frame indices */
sharp_status sharp_face_effect(const sharp_system* sys, const double* frame,
                               const int* subset, int subset_len, double* out);
/* matrix_out is dim * dim row-major */
sharp_status sharp_face_projector(const sharp_system* sys, const double* frame,
                                  const int* subset, int subset_len, double* matrix_out);

/* labels has length rank; labels[i] in 1..order assigns frame member i to a
 * slit block, 0 leaves it unassigned. values_out has length 2^order - 1,
 * entry mask-1 for the label subset mask. */
sharp_status sharp_slit_values(const sharp_system* sys, const double* frame,
                               const int* labels, int order, const double* rho,
                               const double* effect, double* values_out);
sharp_status sharp_sorkin_order(int order, const double* values, double* out);
sharp_status sharp_sorkin_defect_norm(const sharp_system* sys, const double* frame,
                                      const int* labels, int order, double* out);
sharp_status sharp_maximize_interference(const sharp_system* sys, int order, int trials,
                                         int iters, uint64_t seed, double* best_out,
                                         double* rho_out, double* effect_out,
                                         double* frame_out);

/* ---- command-level entry points (JSON text in, TSV report out) ----
 * Returned strings are heap-allocated; release with sharp_string_free. */

sharp_status sharp_run_table(const char* table_json, int order, char** tsv_out);
sharp_status sharp_run_interference(const char* experiment_json, char** tsv_out);
sharp_status sharp_run_scan(const char* theory_json, int order, int trials, int iters,
                            uint64_t seed, char** tsv_out, double* best_out);
/* tol <= 0 keeps each check's pinned threshold; all_pass_out receives 1/0 */
sharp_status sharp_run_verify(const char* theory_json, uint64_t seed, double tol,
                              char** tsv_out, int* all_pass_out);
void sharp_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* SHARPGPT_H */
