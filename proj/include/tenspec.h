/*
 * tenspec C API: spectral analysis of antisymmetric-tensor characteristic
 * polynomials.
 *
 * All functions return tenspec_status; every non-OK return leaves a
 * human-readable message in tenspec_last_error() (thread local).  Objects are
 * opaque handles released with their _free function; strings returned through
 * char** are released with tenspec_string_free.
 */

#ifndef TENSPEC_H
#define TENSPEC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tenspec_status {
  TENSPEC_OK = 0,
  TENSPEC_EINVAL = 1,   /* invalid argument / validation failure */
  TENSPEC_EPARSE = 2,   /* malformed JSON or numeric string */
  TENSPEC_ENUMERIC = 3, /* numerical failure (non-convergence, domain) */
} tenspec_status;

const char* tenspec_version(void);
const char* tenspec_last_error(void);
void tenspec_string_free(char* s);

/* ------------------------------------------------------------------ */
/* exact tensors and polynomials                                       */
/* ------------------------------------------------------------------ */

typedef struct tenspec_tensor tenspec_tensor;
typedef struct tenspec_poly tenspec_poly;

/* {"n":..,"p":..,"kind":"real"|"complex","entries":[{"idx":[..],"re":..,"im":..}]} */
tenspec_status tenspec_tensor_from_json(const char* json, tenspec_tensor** out);
tenspec_status tenspec_tensor_to_json(const tenspec_tensor* t, char** json_out);
void tenspec_tensor_free(tenspec_tensor* t);

/* couplings JSON: {"p":..,"g":[{"pattern":"0110","re":..,"im":..}],"gtilde":[..]} */
tenspec_status tenspec_charpoly_exact(const tenspec_tensor* t,
                                      const char* couplings_json,
                                      tenspec_poly** out);
/* couplings 1/p! on the all-psi and all-psibar patterns (the increasing-tuple
 * pair interaction) */
tenspec_status tenspec_charpoly_pf_pair(const tenspec_tensor* t, tenspec_poly** out);

/* closed-form averaged polynomial; mu as exact decimal/rational strings */
tenspec_status tenspec_avg_charpoly(int n, int p, const char* mu_re,
                                    const char* mu_im, tenspec_poly** out);
/* same, parametrized by mu-tilde = mu n^{p-1} */
tenspec_status tenspec_avg_charpoly_from_tilde(int n, int p,
                                               const char* mu_tilde_re,
                                               const char* mu_tilde_im,
                                               tenspec_poly** out);
/* sigma^n He_n(lambda/sigma), sigma an exact rational string */
tenspec_status tenspec_hermite_poly(int n, const char* sigma, tenspec_poly** out);

tenspec_status tenspec_poly_degree(const tenspec_poly* poly, long* out);
tenspec_status tenspec_poly_to_json(const tenspec_poly* poly, char** json_out);
tenspec_status tenspec_poly_eval(const tenspec_poly* poly, double re, double im,
                                 double* out_re, double* out_im);
void tenspec_poly_free(tenspec_poly* poly);

/* exact pfaffian of the order-2 antisymmetric tensor as "num/den" strings */
tenspec_status tenspec_pfaffian(const tenspec_tensor* t, char** re_out, char** im_out);
tenspec_status tenspec_hyperpfaffian(const tenspec_tensor* t, char** re_out,
                                     char** im_out);

/* effective coupling of a named interaction family; exact rational strings */
tenspec_status tenspec_preset_mu(const char* preset, const char* kind, int p,
                                 int n, const char* alpha, char** re_out,
                                 char** im_out);

/* ------------------------------------------------------------------ */
/* roots of the averaged polynomial                                    */
/* ------------------------------------------------------------------ */

typedef struct tenspec_rootset tenspec_rootset;

tenspec_status tenspec_roots(int n, int p, double mu_tilde_re, double mu_tilde_im,
                             unsigned precision_bits, double tol,
                             tenspec_rootset** out);
tenspec_status tenspec_rootset_size(const tenspec_rootset* rs, size_t* out);
tenspec_status tenspec_rootset_get(const tenspec_rootset* rs, size_t i,
                                   double* re, double* im, double* residual);
/* orbit index and phase index of the p-fold symmetry; origin roots report
 * orbit -1 */
tenspec_status tenspec_rootset_orbit(const tenspec_rootset* rs, size_t i,
                                     int* orbit, int* phase_index);
tenspec_status tenspec_rootset_zero_multiplicity(const tenspec_rootset* rs,
                                                 int* out);
/* sum of k-th powers of all roots */
tenspec_status tenspec_rootset_power_sum(const tenspec_rootset* rs, int k,
                                         double* re, double* im);
tenspec_status tenspec_rootset_to_json(const tenspec_rootset* rs, char** json_out);
void tenspec_rootset_free(tenspec_rootset* rs);

/* gap and analytic tail bound of the generating-function identity at
 * lambda0, truncated at kmax */
tenspec_status tenspec_generating_identity(int n, int p, double mu_tilde_re,
                                           double mu_tilde_im, double lambda0_re,
                                           double lambda0_im, int kmax,
                                           double* gap, double* bound);

/* ------------------------------------------------------------------ */
/* densities                                                           */
/* ------------------------------------------------------------------ */

tenspec_status tenspec_fc_number(int p, int k, char** num_out, char** den_out);
tenspec_status tenspec_fc_branch(int p, double z_re, double z_im, double* q_re,
                                 double* q_im);
tenspec_status tenspec_density_P(int p, double x, double* out);
tenspec_status tenspec_rho_gurau(int p, double y, double* out);
tenspec_status tenspec_rho_radial(int p, double mu_tilde, double r, double* out);
tenspec_status tenspec_rho_radial_cdf(int p, double mu_tilde, double r, double* out);
tenspec_status tenspec_radial_support(int p, double mu_tilde, double* out);
tenspec_status tenspec_moments_check(int p, int kmax, double* max_rel_error,
                                     double* normalization_error);
/* KS distance between |roots| in the sample array and the radial law */
tenspec_status tenspec_ks_distance(int p, double mu_tilde, const double* moduli,
                                   size_t count, double* out);

/* ------------------------------------------------------------------ */
/* saddles and thimbles                                                */
/* ------------------------------------------------------------------ */

typedef struct tenspec_saddleset tenspec_saddleset;

tenspec_status tenspec_saddles(int p, double z_re, double z_im,
                               double contour_radius_or_zero,
                               tenspec_saddleset** out);
tenspec_status tenspec_saddleset_size(const tenspec_saddleset* ss, size_t* out);
tenspec_status tenspec_saddleset_get(const tenspec_saddleset* ss, size_t i,
                                     double* q_re, double* q_im, double* s_re,
                                     double* s_im, int* contributing,
                                     int* dominant);
tenspec_status tenspec_saddleset_to_json(const tenspec_saddleset* ss,
                                         int include_thimbles, char** json_out);
/* SVG panel with saddles, flows and sign regions */
tenspec_status tenspec_saddleset_to_svg(const tenspec_saddleset* ss, char** svg_out);
void tenspec_saddleset_free(tenspec_saddleset* ss);

tenspec_status tenspec_rho_from_saddle(int p, double mu_tilde, double r,
                                       double* out);
tenspec_status tenspec_omega_saddle(int p, double mu_tilde, double lambda_re,
                                    double lambda_im, double* q_re, double* q_im);

typedef struct tenspec_vector tenspec_vector;

tenspec_status tenspec_predict_zero_radii(int p, double mu_tilde, int n,
                                          tenspec_vector** out);
tenspec_status tenspec_vector_size(const tenspec_vector* v, size_t* out);
tenspec_status tenspec_vector_get(const tenspec_vector* v, size_t i, double* out);
void tenspec_vector_free(tenspec_vector* v);

/* ------------------------------------------------------------------ */
/* Monte Carlo                                                         */
/* ------------------------------------------------------------------ */

typedef struct tenspec_mc_report tenspec_mc_report;

/* preset: "psi-p-psibar-p" | "single-bar-sum" | "mixed-<k>" |
 * "symmetric-matrix"; kind: "real" | "complex" (tensor presets only) */
tenspec_status tenspec_mc_run(int n, int p, const char* preset, const char* kind,
                              const char* alpha, double sigma, long samples,
                              uint64_t seed, tenspec_mc_report** out);
tenspec_status tenspec_mc_report_to_json(const tenspec_mc_report* rep,
                                         char** json_out);
tenspec_status tenspec_mc_report_max_z(const tenspec_mc_report* rep, double* out);
void tenspec_mc_report_free(tenspec_mc_report* rep);

/* ------------------------------------------------------------------ */
/* figures and self checks                                             */
/* ------------------------------------------------------------------ */

tenspec_status tenspec_rootset_to_svg(const tenspec_rootset* rs, char** svg_out);
/* density curve with optional histogram overlay of the sample values */
tenspec_status tenspec_density_svg(int p, double mu_tilde, int grid,
                                   const double* hist_values, size_t hist_count,
                                   int hist_bins, char** svg_out);

/* one pass/fail line per executed check; exits nonzero on failure.
 * suite: "all" or a module suite name; returns TENSPEC_ENUMERIC if any check
 * fails. report is a JSON array of {suite,name,pass,detail}. */
tenspec_status tenspec_verify(const char* suite, int quick, char** report_json,
                              int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* TENSPEC_H */
