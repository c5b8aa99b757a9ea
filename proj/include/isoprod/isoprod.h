#ifndef ISOPROD_H
#define ISOPROD_H

/* C API of the isoprod shared library.
 *
 * Objects are opaque handles created and destroyed by the library. Every
 * fallible call returns an isoprod_status; on failure a thread-local message
 * is retrievable with isoprod_last_error(). Strings returned through out
 * parameters are owned by the caller and released with isoprod_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ISOPROD_API __declspec(dllexport)
#else
#define ISOPROD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum isoprod_status {
    ISOPROD_OK = 0,
    ISOPROD_ERR_INVALID_ARGUMENT = 1,
    ISOPROD_ERR_NO_CONVERGENCE = 2,
    ISOPROD_ERR_BAD_INPUT_FILE = 3,
    ISOPROD_ERR_INTERNAL = 4
} isoprod_status;

typedef struct isoprod_profile isoprod_profile;
typedef struct isoprod_strip isoprod_strip;
typedef struct isoprod_path isoprod_path;

ISOPROD_API const char* isoprod_last_error(void);
ISOPROD_API void isoprod_string_free(char* s);

/* ---- profiles ---- */

ISOPROD_API isoprod_status isoprod_profile_sphere(int dim, int sample_count,
                                                  isoprod_profile** out);
ISOPROD_API isoprod_status isoprod_profile_from_json(const char* json_text,
                                                     isoprod_profile** out);
ISOPROD_API isoprod_status isoprod_profile_to_json(const isoprod_profile* p,
                                                   char** out_text);
ISOPROD_API isoprod_status isoprod_profile_scale(const isoprod_profile* p,
                                                 double lam,
                                                 isoprod_profile** out);
ISOPROD_API isoprod_status isoprod_profile_eval(const isoprod_profile* p,
                                                double v, double* out_area);
ISOPROD_API isoprod_status isoprod_profile_dim(const isoprod_profile* p,
                                               int* out_dim);
ISOPROD_API isoprod_status isoprod_profile_total_volume(
    const isoprod_profile* p, double* out_volume);
ISOPROD_API isoprod_status isoprod_profile_sample_count(
    const isoprod_profile* p, size_t* out_count);
ISOPROD_API isoprod_status isoprod_profile_sample(const isoprod_profile* p,
                                                  size_t index, double* out_v,
                                                  double* out_area);
ISOPROD_API isoprod_status isoprod_profile_check_symmetry(
    const isoprod_profile* p, double tol, int* out_symmetric);
ISOPROD_API isoprod_status isoprod_profile_kappa0(const isoprod_profile* p,
                                                  double v0, double* out);
ISOPROD_API isoprod_status isoprod_profile_cheeger_a0(const isoprod_profile* p,
                                                      double w0, double* out);
ISOPROD_API isoprod_status isoprod_profile_chord_slope(const isoprod_profile* p,
                                                       double y, double* out);
ISOPROD_API void isoprod_profile_free(isoprod_profile* p);

/* ---- model strip ---- */

ISOPROD_API isoprod_status isoprod_strip_new(int m, int n,
                                             const isoprod_profile* phi,
                                             const isoprod_profile* psi,
                                             double lam, isoprod_strip** out);
ISOPROD_API void isoprod_strip_free(isoprod_strip* s);

typedef struct isoprod_model_result {
    double value;           /* DP minimum at the matched area */
    double certified_lower; /* cell-minimum-density DP at the same area */
    double area;            /* achieved area, within one grid cell of v */
    double f_upper;         /* cylinder candidate area at v */
    /* Lagrangian diagnostics; matched == 0 flags the duality gap */
    int lagrangian_matched;
    double bracket_area_lo, bracket_perimeter_lo;
    double bracket_area_hi, bracket_perimeter_hi;
} isoprod_model_result;

ISOPROD_API isoprod_status isoprod_minimize_perimeter(
    const isoprod_strip* s, double v, int nx, int ny,
    isoprod_model_result* out, isoprod_path** out_path /* nullable */);

ISOPROD_API size_t isoprod_path_size(const isoprod_path* p);
ISOPROD_API isoprod_status isoprod_path_vertex(const isoprod_path* p,
                                               size_t index, double* out_x,
                                               double* out_y);
ISOPROD_API isoprod_status isoprod_path_to_json(const isoprod_path* p,
                                                char** out_text);
ISOPROD_API void isoprod_path_free(isoprod_path* p);

ISOPROD_API isoprod_status isoprod_rescaled_perimeter(const isoprod_strip* s,
                                                      const double* xy,
                                                      size_t vertex_count,
                                                      double* out);
ISOPROD_API isoprod_status isoprod_enclosed_area(const isoprod_strip* s,
                                                 const double* xy,
                                                 size_t vertex_count,
                                                 double* out);

/* ---- bounds ---- */

typedef enum isoprod_verdict {
    ISOPROD_VERDICT_HOLDS = 0,
    ISOPROD_VERDICT_VIOLATED_NUMERICALLY = 1,
    ISOPROD_VERDICT_LAMBDA_BELOW_THRESHOLD = 2
} isoprod_verdict;

typedef struct isoprod_sandwich_result {
    double v0, alpha, lam;
    double lambda0;
    double f_upper;
    double lower_floor;
    double model_value;
    double certified_lower;
    double grid_slack;
    int verdict; /* isoprod_verdict */
} isoprod_sandwich_result;

ISOPROD_API isoprod_status isoprod_f_upper(const isoprod_strip* s, double v,
                                           double* out);
ISOPROD_API isoprod_status isoprod_lambda0_threshold(const isoprod_strip* s,
                                                     double v0, double alpha,
                                                     double* out);
ISOPROD_API isoprod_status isoprod_sandwich_check(const isoprod_strip* s,
                                                  double v0, double alpha,
                                                  int nx, int ny,
                                                  isoprod_sandwich_result* out);

/* ---- geometry ---- */

ISOPROD_API isoprod_status isoprod_cylinder_volume(int m, int n, double r0,
                                                   double vn, double lam,
                                                   double* out);
ISOPROD_API isoprod_status isoprod_cylinder_boundary_area(int m, int n,
                                                          double r0, double vn,
                                                          double lam,
                                                          double* out);
ISOPROD_API isoprod_status isoprod_tlambda_area_bounds(
    double lam, int m, int n, double area, double* out_lower,
    double* out_upper, double* out_exact_lateral);

typedef enum isoprod_fbeta_quantity {
    ISOPROD_FBETA_VOLUME = 0,
    ISOPROD_FBETA_AREA = 1
} isoprod_fbeta_quantity;

ISOPROD_API isoprod_status isoprod_fbeta_bounds(double beta, int m,
                                                int quantity, double value,
                                                double* out_lower,
                                                double* out_upper);

typedef struct isoprod_stability_report {
    double mu1;
    double margin;
    double threshold_lambda;
    int strictly_stable;
} isoprod_stability_report;

ISOPROD_API isoprod_status isoprod_stability(int m, int n, double r0,
                                             double vn, double lam, double mu1,
                                             isoprod_stability_report* out);

ISOPROD_API isoprod_status isoprod_mu1_round_sphere(int dim, double radius,
                                                    int resolution,
                                                    double* out_mu1,
                                                    double* out_error);
ISOPROD_API isoprod_status isoprod_mu1_flat_torus(int dim, double side,
                                                  int resolution,
                                                  double* out_mu1,
                                                  double* out_error);

/* ---- oracle harnesses ---- */

typedef struct isoprod_oracle_report {
    int64_t case_count;
    double max_abs_deviation;
    int passed;
} isoprod_oracle_report;

ISOPROD_API isoprod_status isoprod_brute_force_min(const isoprod_strip* s,
                                                   double v, int nx, int ny,
                                                   double* out);
ISOPROD_API isoprod_status isoprod_fuzz_symmetrization(
    const isoprod_strip* s, int trials, uint64_t seed,
    isoprod_oracle_report* out, char** out_worst_case /* nullable */);
ISOPROD_API isoprod_status isoprod_quadrature_crosscheck(
    int m, int samples, isoprod_oracle_report* out);

#ifdef __cplusplus
}
#endif

#endif /* ISOPROD_H */
