/* C interface to the connection-moment and area-distribution library.
 *
 * Every function returns an rgm_status; outputs travel through pointers.
 * On failure the thread-local message from rgm_last_error() describes the
 * cause. Pointers handed out by a report stay valid until the report is
 * freed; strings from rgm_report_json() are freed with rgm_string_free().
 */
#ifndef REGGEMOM_H
#define REGGEMOM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RGM_API __declspec(dllexport)
#else
#define RGM_API __attribute__((visibility("default")))
#endif

typedef enum rgm_status {
    RGM_OK = 0,
    RGM_ERR_INVALID_ARGUMENT = 1,
    RGM_ERR_DOMAIN = 2,
    RGM_ERR_SINGULAR_POINT = 3,
    RGM_ERR_NO_CONVERGENCE = 4,
    RGM_ERR_INSUFFICIENT_ORDER = 5,
    RGM_ERR_INTERNAL = 6
} rgm_status;

typedef enum rgm_variant {
    RGM_VARIANT_ARCSIN = 0,
    RGM_VARIANT_LINEAR = 1
} rgm_variant;

typedef enum rgm_route {
    RGM_ROUTE_SERIES_UNRESCALED = 0,
    RGM_ROUTE_SERIES_RESCALED = 1,
    RGM_ROUTE_INTEGRAL_REP = 2,
    RGM_ROUTE_RADIAL_QUADRATURE = 3
} rgm_route;

typedef enum rgm_region {
    RGM_REGION_SPACELIKE = 0,
    RGM_REGION_TIMELIKE = 1
} rgm_region;

typedef struct rgm_complex {
    double re;
    double im;
} rgm_complex;

RGM_API const char* rgm_version(void);

/* Message for the most recent failure on this thread; never NULL. */
RGM_API const char* rgm_last_error(void);

/* Moment of the monomial v^{2l} for the given variant, along one route. */
RGM_API rgm_status rgm_moment(unsigned l, double gamma, rgm_variant variant,
                              rgm_route route, rgm_complex* out);

/* moment(l) conj(moment(m)) / 8, the factorized two-monomial moment. */
RGM_API rgm_status rgm_factorized_moment(unsigned l, unsigned m, double gamma,
                                         rgm_variant variant, rgm_complex* out);

/* Distribution N(vsq) and (2 pi)^2 N(vsq); either output may be NULL. */
RGM_API rgm_status rgm_distribution(double vsq, double gamma, rgm_variant variant,
                                    double* n_out, double* scaled_out);

/* n-th singular point (n >= 1) of the arcsin-variant density. */
RGM_API rgm_status rgm_singular_point(double gamma, unsigned n,
                                      rgm_complex* location_out, int* order_out);

/* Interior maxima of N on [vsq_lo, vsq_hi]. Writes at most `capacity`
 * abscissae; *count_out is the number found (compare to detect truncation). */
RGM_API rgm_status rgm_local_maxima(double gamma, double vsq_lo, double vsq_hi,
                                    rgm_variant variant, double* out,
                                    size_t capacity, size_t* count_out);

/* Least-squares decay rate of -ln N over |A| in [10, 30], plus the
 * theoretical rate for this variant and region. */
RGM_API rgm_status rgm_decay_rate(double gamma, rgm_region region,
                                  rgm_variant variant, double* fitted_out,
                                  double* theoretical_out);

/* Modified integral Bessel function Ki1 (cosh-kernel definition), Re x > 0. */
RGM_API rgm_status rgm_ki1(rgm_complex x, rgm_complex* out);

/* Normalization of the radial connection measure, by quadrature. */
RGM_API rgm_status rgm_measure_norm(double* out);

/* ---- verification suite ---- */

typedef struct rgm_report rgm_report;

typedef struct rgm_check_entry {
    const char* name; /* borrowed from the report */
    rgm_complex lhs;
    rgm_complex rhs;
    double abs_err;
    double rel_err;
    double tolerance;
    int relative_policy; /* 1: relative tolerance, 0: absolute */
    int passed;
    int informational;
    const char* note; /* borrowed from the report */
} rgm_check_entry;

/* Runs the cross-check suite; only_family = NULL runs every family.
 * An unknown family name fails with RGM_ERR_INVALID_ARGUMENT. */
RGM_API rgm_status rgm_verify_run(const char* only_family, rgm_report** out);
RGM_API size_t rgm_report_size(const rgm_report* report);
RGM_API rgm_status rgm_report_entry(const rgm_report* report, size_t index,
                                    rgm_check_entry* out);
RGM_API int rgm_report_all_passed(const rgm_report* report);
RGM_API rgm_status rgm_report_json(const rgm_report* report, char** json_out);
RGM_API void rgm_report_free(rgm_report* report);
RGM_API void rgm_string_free(char* s);

RGM_API int rgm_known_check_family(const char* name);
/* Static NULL-terminated array of family names; do not free. */
RGM_API const char* const* rgm_check_families(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* REGGEMOM_H */
