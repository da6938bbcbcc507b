/* becrad: Bogoliubov radiation from a moving impurity in a homogeneous BEC.
 *
 * C API over the C++ core. All quantities cross this boundary in the caller's
 * input units (the units of the condensate parameters); conversion to the
 * internal natural units (hbar = M = c = 1) happens inside. Handles are
 * opaque; every fallible call returns br_status and leaves a human-readable
 * message in br_last_error() on failure, stored per thread.
 */
#ifndef BECRAD_H
#define BECRAD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum br_status {
    BR_OK = 0,
    BR_INVALID_ARGUMENT = 1,
    BR_DOMAIN_ERROR = 2,
    BR_NUMERICAL_FAILURE = 3,
    BR_UNSUPPORTED = 4
} br_status;

/* semantic version of the library, e.g. "1.0.0" */
const char* br_version(void);

/* message from the most recent failing call in the current thread; empty
 * string when the last call succeeded */
const char* br_last_error(void);

/* ------------------------------------------------------------------ */
/* condensate                                                          */

typedef struct br_condensate br_condensate;

typedef struct br_condensate_params {
    double mass;              /* boson mass M > 0 */
    double coupling;          /* boson-boson coupling g > 0 (energy * volume) */
    double density;           /* condensate density n > 0 (1 / volume) */
    double impurity_coupling; /* impurity coupling lambda (energy * volume) */
    double hbar;              /* <= 0 selects 1 */
    double particle_number;   /* N; <= 0 means unset (needed for depletion) */
    double box_length;        /* L; <= 0 means unset (needed for depletion) */
} br_condensate_params;

br_status br_condensate_create(const br_condensate_params* params, br_condensate** out);
void br_condensate_destroy(br_condensate* cond);

/* natural-unit scales: L0 = hbar/(M c), T0 = hbar/(M c^2), E0 = M c^2 */
typedef struct br_unit_scales {
    double L0;
    double T0;
    double E0;
} br_unit_scales;
br_status br_condensate_unit_scales(const br_condensate* cond, br_unit_scales* out);

typedef struct br_derived_scales {
    double sound_speed;        /* c = sqrt(g n / M) */
    double coherence_length;   /* xi = hbar / (2 M c) */
    double scattering_length;  /* a_s = M g / (4 pi hbar^2) */
    double diluteness;         /* n a_s^3 */
    int diluteness_warning;    /* 1 when n a_s^3 exceeds the dilute regime */
} br_derived_scales;
br_status br_condensate_derived(const br_condensate* cond, br_derived_scales* out);

/* Bogoliubov mode at polar angle theta from the motion axis. */
typedef struct br_mode {
    double k;       /* input 1/length */
    double theta;
    double omega;   /* Bogoliubov frequency, input 1/time */
    double epsilon; /* free-particle energy, input energy */
    double kz;      /* input 1/length */
} br_mode;
br_status br_condensate_mode(const br_condensate* cond, double k, double theta, br_mode* out);

/* ------------------------------------------------------------------ */
/* trajectories (input units; independent of any condensate)           */

typedef struct br_trajectory br_trajectory;

br_status br_trajectory_constant_velocity(double v, br_trajectory** out);
/* z(t) = zeta0 e^{-gamma0 t} */
br_status br_trajectory_exponential_decay(double zeta0, double gamma0, br_trajectory** out);
/* z(t) = sqrt((c^2/a)^2 + (c t)^2), proper acceleration a, speed limit c */
br_status br_trajectory_uniform_acceleration(double a, double c, br_trajectory** out);
/* tabulated path; order 1 = linear, 3 = natural cubic spline */
br_status br_trajectory_sampled(const double* t, const double* z, size_t n, int order,
                                br_trajectory** out);
/* CSV with two columns t,z; one header row tolerated */
br_status br_trajectory_sampled_csv(const char* path, int order, br_trajectory** out);
void br_trajectory_destroy(br_trajectory* traj);

br_status br_trajectory_position(const br_trajectory* traj, double t, double* out);
br_status br_trajectory_speed(const br_trajectory* traj, double t, double* out);
/* external potential the trajectory solves for an impurity of mass m_imp */
br_status br_trajectory_classical_potential(const br_trajectory* traj, double zeta,
                                            double m_imp, double* out);
/* rigid shift by zeta_c; radiation observables must not change */
br_status br_trajectory_translated(const br_trajectory* traj, double zeta_c,
                                   br_trajectory** out);

typedef struct br_trajectory_diagnostics {
    double max_speed;     /* over the sampled interval */
    int has_gamma_char;   /* characteristic rate available */
    double gamma_char;    /* decay rate, or a/c for hyperbolic motion */
    int has_l_a;
    double l_a;           /* acceleration length c^2/a */
    double t_unruh;       /* hbar gamma_char / (2 pi) */
    double t_accel;       /* hbar a / (2 c), hyperbolic motion only (else 0) */
} br_trajectory_diagnostics;
br_status br_trajectory_diagnostics_get(const br_trajectory* traj, double t_lo, double t_hi,
                                        double hbar, br_trajectory_diagnostics* out);

/* ------------------------------------------------------------------ */
/* phase integrals                                                     */

/* either endpoint may be marked infinite; the value is then ignored */
typedef struct br_window {
    double t_i;
    double t_f;
    int infinite_i;
    int infinite_f;
} br_window;

typedef enum br_regulator_kind {
    BR_REG_NONE = 0,
    BR_REG_EXPONENTIAL = 1, /* e^{-eps |t|} */
    BR_REG_GAUSSIAN = 2     /* e^{-eps t^2} */
} br_regulator_kind;

/* ladder = strictly decreasing strengths (input time units); empty ladder
 * with kind != none selects the automatic mode-aware ladder; order 0 keeps
 * the automatic extrapolation order */
typedef struct br_regulator {
    int kind;
    const double* ladder;
    size_t ladder_len;
    int order;
} br_regulator;

typedef enum br_provenance {
    BR_PROV_NUMERIC = 0,
    BR_PROV_CLOSED_FORM = 1,
    BR_PROV_REGULATOR_EXTRAPOLATED = 2,
    BR_PROV_ASYMPTOTIC = 3
} br_provenance;

typedef enum br_distribution_flag {
    BR_FLAG_NONE = 0,
    BR_FLAG_DELTA_OMEGA = 1,
    BR_FLAG_DELTA_MU = 2
} br_distribution_flag;

typedef struct br_phase_integral {
    double value_re; /* input time units */
    double value_im;
    double error;
    int provenance;       /* br_provenance */
    int flag;             /* br_distribution_flag */
    double flag_coefficient; /* natural units; bookkeeping of the distributional
                              * remnant, never part of an observable */
} br_phase_integral;

/* regulated / windowed I_k = int dt e^{i omega t - i k_z z(t)}; tol is the
 * relative accuracy target */
br_status br_phase_integral_numeric(const br_condensate* cond, const br_trajectory* traj,
                                    double k, double theta, const br_window* window,
                                    const br_regulator* reg, double tol,
                                    br_phase_integral* out);
br_status br_phase_integral_closed_exponential(const br_condensate* cond, double zeta0,
                                               double gamma0, double k, double theta,
                                               const br_window* window,
                                               br_phase_integral* out);
br_status br_phase_integral_closed_uniform_acceleration(const br_condensate* cond, double a,
                                                        double k, double theta,
                                                        br_phase_integral* out);
/* polynomial extrapolation of a regulator ladder to zero strength; eps must be
 * strictly decreasing, all entries sharing provenance and carrying no flags */
br_status br_phase_integral_extrapolate(const double* eps, const br_phase_integral* values,
                                        size_t n, int order, br_phase_integral* out);

/* ------------------------------------------------------------------ */
/* spectra and energies                                                */

typedef struct br_spectrum_point {
    double k;     /* input 1/length */
    double theta;
    double omega; /* input 1/time */
    double dn_dk_domega;
    double dE_dk_domega;
    int provenance;
} br_spectrum_point;

/* +1 selects the hemisphere with k_z zeta0 > 0 (Planck-suppressed),
 * -1 the enhanced one */
typedef enum br_hemisphere { BR_HEMI_UPPER = 1, BR_HEMI_LOWER = -1 } br_hemisphere;

br_status br_spectrum_occupation(const br_condensate* cond, double k, double theta,
                                 const br_phase_integral* integral, br_spectrum_point* out);
br_status br_spectrum_exponential(const br_condensate* cond, double gamma0, double k,
                                  double theta, int hemisphere, br_spectrum_point* out);
br_status br_spectrum_exponential_windowed(const br_condensate* cond, double gamma0,
                                           double zeta0, const br_window* window, double k,
                                           double theta, br_spectrum_point* out);
br_status br_spectrum_uniform_acceleration(const br_condensate* cond, double a, double k,
                                           double theta, br_spectrum_point* out);

typedef enum br_asymptotic_law {
    BR_ASY_IR_EXPONENTIAL = 0,       /* parameter ignored */
    BR_ASY_UV_EXPONENTIAL_LOWER = 1, /* parameter = gamma0 */
    BR_ASY_IR_WINDOWED = 2,          /* parameter = window duration */
    BR_ASY_IR_UNIFORM = 3,           /* parameter = a */
    BR_ASY_UV_UNIFORM = 4            /* parameter = a */
} br_asymptotic_law;
br_status br_spectrum_asymptotic(const br_condensate* cond, int law, double parameter,
                                 double k, double theta, br_spectrum_point* out);

typedef struct br_energy_grid {
    int n_theta;  /* Gauss-Legendre nodes per hemisphere; 0 selects 32 */
    double k_min; /* 0 = automatic infrared handling */
    double tol;   /* relative; 0 selects 1e-7 */
} br_energy_grid;

typedef struct br_energy_report {
    double total;
    double upper; /* z > 0 hemisphere */
    double lower;
    double k_max;
    double truncation_error;
    int divergent;
    double tail_exponent;
} br_energy_report;

br_status br_total_energy(const br_condensate* cond, const br_trajectory* traj,
                          const br_window* window, const br_regulator* reg, double k_max,
                          const br_energy_grid* grid, br_energy_report* out);

/* 0 below the sound speed; the grid cutoff caps the emission cone */
br_status br_cherenkov_rate(const br_condensate* cond, double v, double k_max, double* out);

typedef struct br_depletion_report {
    double leading;
    double correction;
    size_t modes_used;
    double box_length;
    double particle_number;
    double k_max;
    double tail_estimate;
} br_depletion_report;

br_status br_depletion(const br_condensate* cond, const br_trajectory* traj,
                       const br_window* window, const br_regulator* reg, double k_max,
                       double t, br_depletion_report* out);

/* ------------------------------------------------------------------ */
/* validation                                                          */

/* Runs the self-check suite. k1_perturbation injects a relative error into
 * the Bessel K1 values seen by the K1 integral check (canary: a nonzero value
 * must flip that check to fail). On success *json_out is a malloc'd report,
 * released with br_string_free; *all_pass reflects the suite verdict. */
br_status br_validate_run(double k1_perturbation, unsigned long long seed, char** json_out,
                          int* all_pass);
void br_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* BECRAD_H */
