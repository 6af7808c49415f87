/* C interface to the simplexmatch graph-matching library. */
#ifndef SIMPLEXMATCH_H
#define SIMPLEXMATCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(SM_BUILDING_LIBRARY)
#define SM_API __attribute__((visibility("default")))
#else
#define SM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sm_status {
  SM_OK = 0,
  SM_ERR_ARGUMENT = 1, /* invalid argument or configuration */
  SM_ERR_NUMERIC = 2,  /* numerical failure inside a solver */
  SM_ERR_IO = 3,
  SM_ERR_INTERNAL = 4
} sm_status;

typedef struct sm_matrix sm_matrix;
typedef struct sm_permutation sm_permutation;

/* Message for the last failing call on this thread; never NULL. */
SM_API const char* sm_last_error(void);
SM_API const char* sm_status_name(sm_status status);
SM_API const char* sm_version(void);

/* Dense square matrices, row-major on the boundary. */
SM_API sm_status sm_matrix_create(int n, const double* row_major, sm_matrix** out);
SM_API void sm_matrix_free(sm_matrix* m);
SM_API int sm_matrix_dim(const sm_matrix* m);
SM_API sm_status sm_matrix_copy_data(const sm_matrix* m, double* row_major, size_t capacity);
/* ".csv" paths are matrix CSV (n, then n rows); anything else is an edge list. */
SM_API sm_status sm_matrix_read(const char* path, sm_matrix** out);
SM_API sm_status sm_matrix_write_csv(const sm_matrix* m, const char* path);

SM_API sm_status sm_permutation_create(int n, const int* map, sm_permutation** out);
SM_API void sm_permutation_free(sm_permutation* p);
SM_API int sm_permutation_size(const sm_permutation* p);
SM_API sm_status sm_permutation_copy_map(const sm_permutation* p, int* map, size_t capacity);
SM_API sm_status sm_permutation_read(const char* path, sm_permutation** out);
SM_API sm_status sm_permutation_write(const sm_permutation* p, const char* path);
SM_API sm_status sm_overlap(const sm_permutation* p, const sm_permutation* truth, double* out);

typedef struct sm_model_params {
  const char* kind; /* "CGW", "CER" or "SUBSAMPLE" */
  int n;
  double sigma;
  double p;                /* CER edge density */
  double s;                /* SUBSAMPLE retention probability */
  int standardize;         /* CER: nonzero to standardize both graphs */
  const char* parent_path; /* SUBSAMPLE edge list */
  uint64_t seed;
} sm_model_params;

/* Samples a pair (A, B) and the ground-truth permutation. */
SM_API sm_status sm_generate(const sm_model_params* params, sm_matrix** a, sm_matrix** b, sm_permutation** truth);

typedef struct sm_solve_options {
  const char* algo; /* "emd", "pgd", "grampa", "umeyama" */
  int iters;
  const char* step; /* "fixed", "dynamic", "heuristic:θ", "const:γ" */
  double eta;
  int invert_fixed_l;
} sm_solve_options;

typedef struct sm_solve_info {
  double energy_best; /* iterative solvers only */
  int iterations;
  int best_iteration;
} sm_solve_info;

SM_API void sm_solve_options_default(sm_solve_options* opts);
/* similarity, rounded and info may each be NULL when not wanted. */
SM_API sm_status sm_solve(const sm_matrix* a, const sm_matrix* b, const sm_solve_options* opts,
                          sm_matrix** similarity, sm_permutation** rounded, sm_solve_info* info);

typedef struct sm_property_report {
  double frac_suffcond_max;
  double frac_suffcond_sum;
  double frac_suffcond_summax;
  double frac_diag_dominant_rows;
  double overlap_after_rounding;
} sm_property_report;

SM_API sm_status sm_property_report_compute(const sm_matrix* x, const sm_permutation* truth,
                                            sm_property_report* out);
SM_API sm_status sm_efficiency_ratio(const sm_matrix* a, const sm_matrix* b, int samples, uint64_t seed,
                                     double* out);
SM_API sm_status sm_error_cdf(const double* errors, size_t count, const double* grid, size_t grid_count,
                              double* out);

typedef struct sm_population_row {
  int k;
  double x_diag;
  double x_off;
  double ratio;
  int rounds_to_identity;
} sm_population_row;

/* Writes count + 1 rows (k = 0..count). */
SM_API sm_status sm_population_trajectory(int n, double sigma, const double* rates, size_t count,
                                          sm_population_row* rows);
SM_API sm_status sm_ratio_recursion(int n, double sigma, const double* rates, size_t count, double* out);
SM_API sm_status sm_rates_for_gaps(int n, double sigma, const double* gaps, size_t count, double* rates);
SM_API sm_status sm_check_multistep_rates(int n, const double* rates, size_t count, int* ok);

/* Runs the sweep described by a JSON config and writes its outputs; out_dir may be NULL to use the
 * config's "outputs". Property tracking runs as well when the config enables it. */
SM_API sm_status sm_benchmark_run(const char* config_path, const char* out_dir, int threads);

/* The instance a config would use for one grid point and trial. */
SM_API sm_status sm_generate_from_config(const char* config_path, size_t sigma_index, int trial,
                                         sm_matrix** a, sm_matrix** b, sm_permutation** truth);

#ifdef __cplusplus
}
#endif

#endif
