/*
 * ovmq - integral quantization engine
 *
 * C API for the shared library: opaque handles, status codes, value outputs
 * through pointers.  Every function returns OVMQ_OK on success; on failure
 * the return code classifies the error and ovmq_last_error() carries a
 * human-readable message (thread-local).  Handles are destroyed with their
 * matching _destroy function; strings returned through char** are released
 * with ovmq_string_free.
 */

#ifndef OVMQ_H
#define OVMQ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ovmq_status {
  OVMQ_OK = 0,
  OVMQ_ERR_INVALID_ARGUMENT = 1,
  OVMQ_ERR_INTEGRABILITY = 2,
  OVMQ_ERR_NODE_EVALUATION = 3,
  OVMQ_ERR_DIVERGENT_MOMENT = 4,
  OVMQ_ERR_GRID_MISMATCH = 5,
  OVMQ_ERR_INTERNAL = 6
} ovmq_status;

typedef struct ovmq_complex {
  double re;
  double im;
} ovmq_complex;

const char* ovmq_version(void);
const char* ovmq_last_error(void);
void ovmq_string_free(char* s);

/* ---- opaque handles ---- */

typedef struct ovmq_space ovmq_space;           /* truncated Fock space */
typedef struct ovmq_op ovmq_op;                 /* dense complex operator */
typedef struct ovmq_weight ovmq_weight;         /* quantization weight */
typedef struct ovmq_quadrature ovmq_quadrature; /* phase-space quadrature */
typedef struct ovmq_wh ovmq_wh;                 /* Weyl-Heisenberg quantizer */
typedef struct ovmq_family ovmq_family;         /* displaced density family */
typedef struct ovmq_grid ovmq_grid;             /* half-line grid */
typedef struct ovmq_fiducial ovmq_fiducial;     /* affine fiducial vector */
typedef struct ovmq_window ovmq_window;         /* half-plane window */

/* f(z); write the value to *out, return 0 on success (nonzero aborts the
 * quadrature with OVMQ_ERR_NODE_EVALUATION). */
typedef int (*ovmq_phase_fn)(double z_re, double z_im, ovmq_complex* out, void* user);
/* weight evaluator w(z) */
typedef int (*ovmq_weight_fn)(double z_re, double z_im, ovmq_complex* out, void* user);
/* f(q, p) on the half-plane */
typedef int (*ovmq_halfplane_fn)(double q, double p, double* out, void* user);

/* ---- Fock space and operators ---- */

ovmq_status ovmq_space_create(int dim, ovmq_space** out);
void ovmq_space_destroy(ovmq_space* s);
int ovmq_space_dim(const ovmq_space* s);

void ovmq_op_destroy(ovmq_op* op);
int ovmq_op_dim(const ovmq_op* op);
ovmq_status ovmq_op_entry(const ovmq_op* op, int row, int col, ovmq_complex* out);
/* row-major copy into a caller buffer of dim*dim entries */
ovmq_status ovmq_op_copy(const ovmq_op* op, ovmq_complex* buffer);
ovmq_status ovmq_op_trace(const ovmq_op* op, ovmq_complex* out);
/* ascending eigenvalues of a Hermitian operator into a buffer of dim doubles */
ovmq_status ovmq_op_hermitian_eigenvalues(const ovmq_op* op, double* out);
ovmq_status ovmq_op_hermiticity_defect(const ovmq_op* op, double* out);
/* max |a - b| over the top-left block */
ovmq_status ovmq_op_block_max_diff(const ovmq_op* a, const ovmq_op* b, int block,
                                   double* out);
/* shared matrix JSON schema: {label, dim, entries (row-major [re, im]),
 * metadata}; metadata_json may be NULL or a JSON object */
ovmq_status ovmq_op_to_json(const ovmq_op* op, const char* metadata_json, char** out);

ovmq_status ovmq_annihilation(const ovmq_space* s, ovmq_op** out);
ovmq_status ovmq_creation(const ovmq_space* s, ovmq_op** out);
ovmq_status ovmq_number_operator(const ovmq_space* s, ovmq_op** out);
ovmq_status ovmq_position_operator(const ovmq_space* s, ovmq_op** out);
ovmq_status ovmq_momentum_operator(const ovmq_space* s, ovmq_op** out);
ovmq_status ovmq_parity(const ovmq_space* s, ovmq_op** out);

#define OVMQ_DISPLACEMENT_CLOSED_FORM 0
#define OVMQ_DISPLACEMENT_EXPONENTIAL 1
ovmq_status ovmq_displacement(const ovmq_space* s, double z_re, double z_im, int method,
                              ovmq_op** out);

/* coefficients into a buffer of dim entries; *norm_out reports the truncated
 * norm (never silently renormalized) */
ovmq_status ovmq_coherent_state(const ovmq_space* s, double z_re, double z_im,
                                ovmq_complex* coeffs, double* norm_out);

/* ---- weights and quadrature ---- */

ovmq_status ovmq_weight_cahill_glauber(double s_re, double s_im, ovmq_weight** out);
ovmq_status ovmq_weight_custom(ovmq_weight_fn fn, void* user, int real_even,
                               int reflection_real, ovmq_weight** out);
void ovmq_weight_destroy(ovmq_weight* w);

ovmq_status ovmq_quadrature_create(int n_radial, int n_angular, ovmq_quadrature** out);
void ovmq_quadrature_destroy(ovmq_quadrature* q);
/* |sum_k w_k e^{-|z_k|^2} - 1| construction self-test */
ovmq_status ovmq_quadrature_norm_defect(const ovmq_quadrature* q, double* out);

/* ---- Weyl-Heisenberg quantization ---- */

ovmq_status ovmq_wh_create(const ovmq_space* s, const ovmq_weight* w,
                           const ovmq_quadrature* q, ovmq_wh** out);
void ovmq_wh_destroy(ovmq_wh* wh);

ovmq_status ovmq_wh_m(const ovmq_wh* wh, ovmq_op** out);
/* quadrature-built M; OVMQ_ERR_INTEGRABILITY for Cahill-Glauber Re s >= 0 */
ovmq_status ovmq_build_m(const ovmq_space* s, const ovmq_weight* w,
                         const ovmq_quadrature* q, ovmq_op** out);
ovmq_status ovmq_cg_m_analytic(const ovmq_space* s, double s_re, double s_im,
                               ovmq_op** out);
ovmq_status ovmq_wh_displaced_m(const ovmq_wh* wh, double z_re, double z_im,
                                ovmq_op** out);
/* block < 0 selects the default safe block dim/2 */
ovmq_status ovmq_wh_resolution_defect(const ovmq_wh* wh, int block, double* out);
ovmq_status ovmq_wh_quantize(const ovmq_wh* wh, ovmq_phase_fn f, void* user,
                             const char* label, ovmq_op** out);
ovmq_status ovmq_wh_covariance_defect(const ovmq_wh* wh, ovmq_phase_fn f, void* user,
                                      double z0_re, double z0_im, int block, double* out);

/* E0 = 1/2 - dzdzbar w|0 and Em = -dzdzbar w|0; E0 - Em = 1/2 */
ovmq_status ovmq_ho_shifts(const ovmq_weight* w, double* e0, double* em);

ovmq_status ovmq_angle_operator_analytic(const ovmq_space* s, ovmq_op** out);
ovmq_status ovmq_angle_operator_numeric(const ovmq_space* s, int n_radial, int n_angular,
                                        ovmq_op** out);
ovmq_status ovmq_angular_covariance_defect(const ovmq_space* s, double theta,
                                           double nu_phase, int n_radial, int n_angular,
                                           int block, double* out);

ovmq_status ovmq_thermal_s(double omega, double temperature, double* out);
ovmq_status ovmq_boltzmann_rho(const ovmq_space* s, double omega, double temperature,
                               ovmq_op** out, double* tail_mass);
ovmq_status ovmq_trace_duality_defect(const ovmq_space* s, const ovmq_quadrature* q,
                                      ovmq_phase_fn f, void* user, double s_re,
                                      double* out);

/* ---- Berezin / lower symbols ---- */

ovmq_status ovmq_family_coherent(const ovmq_space* s, ovmq_family** out);
ovmq_status ovmq_family_cahill_glauber(const ovmq_space* s, double cg_s,
                                       ovmq_family** out);
void ovmq_family_destroy(ovmq_family* f);

ovmq_status ovmq_overlap_kernel(const ovmq_family* rho_tilde, const ovmq_family* rho,
                                double z_re, double z_im, double zp_re, double zp_im,
                                double* out);
ovmq_status ovmq_lower_symbol(const ovmq_op* a, const ovmq_family* rho_tilde, double z_re,
                              double z_im, ovmq_complex* out);
/* CSV (re_z, im_z, value_re, value_im) of the Berezin transform of f sampled
 * on an n_re x n_im grid over [re0, re1] x [im0, im1] */
ovmq_status ovmq_berezin_field_csv(ovmq_phase_fn f, void* user,
                                   const ovmq_family* rho_tilde, const ovmq_family* rho,
                                   const ovmq_quadrature* q, double re0, double re1,
                                   double im0, double im1, int n_re, int n_im, char** out);

/* ---- affine quantization ---- */

ovmq_status ovmq_grid_geometric(double x_min, double x_max, int n, ovmq_grid** out);
void ovmq_grid_destroy(ovmq_grid* g);
ovmq_status ovmq_grid_gaussian_selftest(const ovmq_grid* g, double* out);

ovmq_status ovmq_fiducial_power_exp(double alpha, double lambda, const ovmq_grid* g,
                                    ovmq_fiducial** out);
void ovmq_fiducial_destroy(ovmq_fiducial* f);
/* OVMQ_ERR_DIVERGENT_MOMENT when 2 alpha - 1 - gamma <= 0 */
ovmq_status ovmq_c_gamma(const ovmq_fiducial* f, double gamma, double* out);
ovmq_status ovmq_kinetic_k(const ovmq_fiducial* f, double* k, int* selfadjoint_flag);
/* JSON moment table {"alpha":..,"lambda":..,"c_gamma":{...},"K":..,
 * "K_geq_3_4":..} for the requested gamma values */
ovmq_status ovmq_moments_json(const ovmq_fiducial* f, const double* gammas, int n_gamma,
                              char** out);

ovmq_status ovmq_window_create(double q_min, double q_max, int n_q, double p_max, int n_p,
                               ovmq_window** out);
void ovmq_window_destroy(ovmq_window* w);

ovmq_status ovmq_affine_cs_norm(const ovmq_fiducial* f, double q, double p, double* norm,
                                double* mass_deficit);
/* weak-sense resolution defect over the built-in test-function set */
ovmq_status ovmq_affine_resolution_defect(const ovmq_fiducial* f, const ovmq_window* w,
                                          double* out);
/* CSV (q,p,rho) of the phase-space density of the fiducial itself */
ovmq_status ovmq_affine_density_csv(const ovmq_fiducial* f, const ovmq_window* w,
                                    char** csv, double* mass, double* peak_q,
                                    double* peak_p);
ovmq_status ovmq_affine_matrix_element(const ovmq_fiducial* f, const ovmq_window* w,
                                       ovmq_halfplane_fn fn, void* user, int phi1_index,
                                       int phi2_index, ovmq_complex* out);

typedef struct ovmq_affine_defects {
  double moment_ratio_beta_half; /* relative, beta = 1/2 */
  double moment_ratio_beta_1;
  double moment_ratio_beta_2;
  double p_defect;       /* |A_p - (-i d/dx)| worst matrix element */
  double kinetic_k;      /* K(psi) from the fiducial */
  double kinetic_k_fit;  /* fitted coefficient of x^{-2} in A_{p^2} - P^2 */
  double kinetic_rel_err;
  double resolution_defect;
} ovmq_affine_defects;

ovmq_status ovmq_affine_operator_defects(const ovmq_fiducial* f, const ovmq_window* w,
                                         ovmq_affine_defects* out);

/* ---- sphere phase space ---- */

ovmq_status ovmq_sphere_complexify(const double x[3], const double p[3], double a_re[3],
                                   double a_im[3]);
ovmq_status ovmq_sphere_complex_angle(const double a_re[3], const double a_im[3],
                                      const double yhat[3], ovmq_complex* out);
/* JSON export of complexified points; xs and ps hold n triples each */
ovmq_status ovmq_sphere_points_json(const double* xs, const double* ps, int n, char** out);

/* ---- verification ---- */

/* Runs the full invariant suite.  config_json may be NULL (defaults) or a
 * JSON object with the RunConfig fields; *report_json receives the pass/fail
 * report.  Check failures are reported through n_failed, not the status. */
ovmq_status ovmq_verify_run(const char* config_json, char** report_json, int* n_failed,
                            int* n_skipped);
ovmq_status ovmq_default_config_json(char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* OVMQ_H */
