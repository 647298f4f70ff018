/* C interface to the shell-potential scattering library.
 *
 * Conventions:
 *   - Every function that can fail returns gamow_status; GAMOW_OK is 0.
 *     On failure, gamow_last_error() returns a message for the calling
 *     thread, valid until its next failing call.
 *   - Complex scalars pass as (re, im) double pairs; complex arrays pass
 *     as parallel re[]/im[] arrays.
 *   - Objects behind opaque handles are created and destroyed here; char*
 *     results must be released with gamow_string_free, pole arrays with
 *     gamow_poles_free.  Handles are immutable once created, so sharing
 *     them across threads needs no locking.
 */
#ifndef GAMOW_H
#define GAMOW_H

#include <stddef.h>

#ifndef GAMOW_API
#define GAMOW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define GAMOW_VERSION_STRING "0.1.0"

typedef enum gamow_status {
    GAMOW_OK = 0,
    GAMOW_ERR_INVALID_ARGUMENT = 1,
    GAMOW_ERR_DEGENERATE_THRESHOLD = 2, /* k = 0: matching loses rank */
    GAMOW_ERR_SINGULAR_MATRIX = 3,      /* k^2 = v0: region basis degenerates */
    GAMOW_ERR_POLE_ENCOUNTERED = 4,     /* evaluation at a Jost zero */
    GAMOW_ERR_DIVERGENT = 5,
    GAMOW_ERR_TAIL_DOMINATED = 6, /* truncation window too small */
    GAMOW_ERR_NOT_CONVERGED = 7,
    GAMOW_ERR_PRECONDITION = 8,
    GAMOW_ERR_PARSE = 9,
    GAMOW_ERR_INTERNAL = 10
} gamow_status;

/* Domain of a sampled function's abscissae. */
typedef enum gamow_domain {
    GAMOW_DOMAIN_TIME = 0,
    GAMOW_DOMAIN_ENERGY = 1,
    GAMOW_DOMAIN_ENERGY_HALFLINE = 2,
    GAMOW_DOMAIN_POSITION = 3
} gamow_domain;

/* Energy-surface sheet for continued evaluation. */
typedef enum gamow_sheet { GAMOW_SHEET_FIRST = 1, GAMOW_SHEET_SECOND = 2 } gamow_sheet;

/* Shell potential: hard wall at 0, free on [0,a], barrier v0 on [a,b],
 * free beyond b.  Units hbar = 2m = 1, E = k^2. */
typedef struct gamow_potential {
    double a;
    double b;
    double v0;
} gamow_potential;

typedef struct gamow_pole {
    double k_re, k_im; /* Jost zero, k_im < 0 */
    double z_re, z_im; /* k^2 on the second sheet */
    double e_r;        /* resonance position, Re z */
    double gamma;      /* width, -2 Im z */
} gamow_pole;

typedef struct gamow_sampled gamow_sampled; /* complex samples on a real grid */
typedef struct gamow_plan gamow_plan;       /* calibrated transform kernel */

GAMOW_API const char* gamow_version(void);
GAMOW_API const char* gamow_last_error(void);
GAMOW_API void gamow_string_free(char* text);

/* ---- scattering ------------------------------------------------------- */

GAMOW_API gamow_status gamow_smatrix(const gamow_potential* pot, double energy,
                                     double* s_re, double* s_im);

/* Jost values at complex momentum k: jm at k, jp = jm(-k). */
GAMOW_API gamow_status gamow_jost(const gamow_potential* pot, double k_re, double k_im,
                                  double* jm_re, double* jm_im, double* jp_re,
                                  double* jp_im);

/* Matched solution chi and chi' sampled at n radii.  Any output array may
 * be NULL to skip that column. */
GAMOW_API gamow_status gamow_wavefunction(const gamow_potential* pot, double k_re,
                                          double k_im, const double* r, size_t n,
                                          double* chi_re, double* chi_im,
                                          double* dchi_re, double* dchi_im);

/* Certified pole search over [0, k_re_max] x [k_im_min, 0] in the k plane.
 * On success *poles holds *count entries (release with gamow_poles_free)
 * and *winding, when non-NULL, the contour count the list was checked
 * against. */
GAMOW_API gamow_status gamow_find_poles(const gamow_potential* pot, double k_re_max,
                                        double k_im_min, gamow_pole** poles,
                                        size_t* count, long* winding);
GAMOW_API void gamow_poles_free(gamow_pole* poles);
GAMOW_API gamow_status gamow_poles_to_json(const gamow_pole* poles, size_t count,
                                           char** json);

/* ---- sampled functions ------------------------------------------------ */

GAMOW_API gamow_status gamow_sampled_create(const double* grid, const double* re,
                                            const double* im, size_t n, gamow_domain domain,
                                            gamow_sampled** out);
GAMOW_API void gamow_sampled_destroy(gamow_sampled* f);
GAMOW_API size_t gamow_sampled_size(const gamow_sampled* f);
GAMOW_API gamow_domain gamow_sampled_domain(const gamow_sampled* f);
/* Copies into caller arrays of gamow_sampled_size(f) elements; any may be NULL. */
GAMOW_API gamow_status gamow_sampled_copy(const gamow_sampled* f, double* grid, double* re,
                                          double* im);
GAMOW_API gamow_status gamow_sampled_to_csv(const gamow_sampled* f, char** text);
GAMOW_API gamow_status gamow_sampled_to_json(const gamow_sampled* f, char** text);
GAMOW_API gamow_status gamow_sampled_from_csv(const char* text, gamow_sampled** out);
GAMOW_API gamow_status gamow_sampled_from_json(const char* text, gamow_sampled** out);
/* Trapezoid L2 norm squared on the function's own grid. */
GAMOW_API gamow_status gamow_l2_norm_sq(const gamow_sampled* f, double* out);

/* ---- Hardy diagnostics ------------------------------------------------ */

/* Smooth bump on (t0, t1) with polynomial degree and phase frequency,
 * sampled on the given grid and normalized to unit L2 norm.  side +1 keeps
 * the support inside (0, inf), -1 inside (-inf, 0). */
GAMOW_API gamow_status gamow_bump(double t0, double t1, int side, int degree, double freq,
                                  const double* grid, size_t n, gamow_sampled** out);

/* Fourier transform onto an automatically sized symmetric energy grid. */
GAMOW_API gamow_status gamow_fourier(const gamow_sampled* f, gamow_sampled** out);

/* Paley-Wiener diagnostic; plane is +1 for the upper half plane, -1 for
 * the lower; tol is the boundedness slack (0 selects the default 1e-6).
 * *pass gets the verdict; *json_report, when non-NULL, the full report
 * with raw line norms. */
GAMOW_API gamow_status gamow_is_hardy(const gamow_sampled* f, int plane, double tol,
                                      int* pass, char** json_report);

/* Restriction of energy-line data to E >= 0. */
GAMOW_API gamow_status gamow_restrict_positive(const gamow_sampled* fhat,
                                               gamow_sampled** out);

/* ---- evolution --------------------------------------------------------- */

/* Multiply energy-side samples by e^{sign i E t}. */
GAMOW_API gamow_status gamow_evolve(const gamow_sampled* fhat, double t, int sign,
                                    gamow_sampled** out);

/* Evolve through each time and rerun the half-plane diagnostic; the JSON
 * report carries per-time line norms and PASS/FAIL verdicts.  tol as for
 * gamow_is_hardy. */
GAMOW_API gamow_status gamow_semigroup(const gamow_sampled* fhat, int sign,
                                       const double* t, size_t nt, double tol,
                                       char** json_report);

/* Decay amplitudes at a resonance pole for nt nonnegative times. */
GAMOW_API gamow_status gamow_decay_law(const gamow_pole* pole, const gamow_sampled* psi_hat,
                                       const double* t, size_t nt, double* amp_re,
                                       double* amp_im);

/* ---- spectral transform ------------------------------------------------ */

/* Calibrate a transform kernel.  sign selects the in/out ket family; pass
 * 0 for any cutoff or point count to get its default (40, 400, 1281,
 * 1280).  Plans are expensive (the kernel is stored) and reusable. */
GAMOW_API gamow_status gamow_plan_create(const gamow_potential* pot, int sign,
                                         double r_cutoff, double e_cutoff, size_t r_points,
                                         size_t e_points, gamow_plan** out);
GAMOW_API void gamow_plan_destroy(gamow_plan* plan);
GAMOW_API size_t gamow_plan_r_points(const gamow_plan* plan);
GAMOW_API size_t gamow_plan_e_points(const gamow_plan* plan);
/* Copies into caller arrays; either may be NULL. */
GAMOW_API gamow_status gamow_plan_grids(const gamow_plan* plan, double* r_grid,
                                        double* e_grid);
GAMOW_API double gamow_plan_norm_constant(const gamow_plan* plan);

/* Position data on the plan's r grid to energy data on its E grid. */
GAMOW_API gamow_status gamow_to_energy(const gamow_plan* plan, const gamow_sampled* f,
                                       gamow_sampled** out);
/* Inverse map with the conjugate kernel. */
GAMOW_API gamow_status gamow_to_position(const gamow_plan* plan, const gamow_sampled* g,
                                         gamow_sampled** out);
/* Wave-operator application: free analysis, interacting synthesis. */
GAMOW_API gamow_status gamow_moller_apply(const gamow_plan* plan, const gamow_sampled* f,
                                          gamow_sampled** out);
/* Norm squared under the plan's quadrature for either side's data. */
GAMOW_API gamow_status gamow_norm_sq(const gamow_plan* plan, const gamow_sampled* f,
                                     double* out);

/* ---- bound audits ------------------------------------------------------ */

/* |continued ket| against the closed-form bound shape on a z x r grid;
 * either output may be NULL. */
GAMOW_API gamow_status gamow_kernel_bound_audit(const gamow_potential* pot,
                                                const double* z_re, const double* z_im,
                                                size_t nz, const double* r, size_t nr,
                                                gamow_sheet sheet, char** json, char** csv);

/* Smooth position profile phi(r) -> (re, im), called with the caller's ctx. */
typedef void (*gamow_profile_fn)(double r, void* ctx, double* re, double* im);

/* Growth of the continued transform of phi along the ray
 * z(s) = origin + s * direction, against the bound with A = support_radius. */
GAMOW_API gamow_status gamow_growth_profile(const gamow_potential* pot, gamow_profile_fn phi,
                                            void* ctx, double support_radius,
                                            double origin_re, double origin_im,
                                            double dir_re, double dir_im, gamow_sheet sheet,
                                            const double* s_values, size_t ns, char** json,
                                            char** csv);

#ifdef __cplusplus
}
#endif

#endif /* GAMOW_H */
