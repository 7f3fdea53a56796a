#ifndef KOROBOV_H
#define KOROBOV_H

/*
 * C interface to the Korobov-space approximation complexity library.
 *
 * Every function that can fail returns a kor_status; KOR_OK means the output
 * parameters were written. On failure kor_last_error() describes the problem
 * for the calling thread. Handles are created by kor_*_create / kor_classify /
 * kor_run_curve etc. and released with the matching kor_*_free.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kor_status {
  KOR_OK = 0,
  KOR_ERROR_DOMAIN = 1,                /* argument outside its mathematical domain */
  KOR_ERROR_PARSE = 2,                 /* malformed weight family text */
  KOR_ERROR_INDEX = 3,                 /* index out of range (truncated weights, bad position) */
  KOR_ERROR_UNSUPPORTED_FAMILY = 4,    /* operation undefined for this weight family */
  KOR_ERROR_UNSUPPORTED_CLASS = 5,     /* operation undefined for this information class */
  KOR_ERROR_UNSUPPORTED_CRITERION = 6, /* operation undefined for this error criterion */
  KOR_ERROR_OVERFLOW = 7,              /* result exceeds the representable range */
  KOR_ERROR_CAP_EXCEEDED = 8,          /* enumeration budget exhausted */
  KOR_ERROR_DEGENERATE_INPUT = 9,      /* not enough structure in the input (fits, grids) */
  KOR_ERROR_INSUFFICIENT_DATA = 10,    /* too few usable points */
  KOR_ERROR_INVALID_ARGUMENT = 11,     /* null pointer or malformed call */
  KOR_ERROR_INTERNAL = 12
} kor_status;

typedef enum kor_norm {
  KOR_NORM_L2 = 0,
  KOR_NORM_SUP = 1
} kor_norm;

typedef enum kor_info_class {
  KOR_CLASS_ALL = 0,     /* all continuous linear functionals */
  KOR_CLASS_STANDARD = 1 /* function evaluations only */
} kor_info_class;

typedef enum kor_criterion {
  KOR_CRITERION_ABSOLUTE = 0,
  KOR_CRITERION_NORMALIZED = 1
} kor_criterion;

typedef enum kor_verdict {
  KOR_VERDICT_HOLDS = 0,
  KOR_VERDICT_FAILS = 1,
  KOR_VERDICT_OPEN_GAP = 2 /* necessary condition holds, sufficient one unknown */
} kor_verdict;

typedef enum kor_notion {
  KOR_NOTION_SPT = 0, /* strong polynomial tractability */
  KOR_NOTION_PT = 1,  /* polynomial tractability */
  KOR_NOTION_QPT = 2, /* quasi-polynomial tractability */
  KOR_NOTION_UWT = 3, /* uniform weak tractability */
  KOR_NOTION_WT = 4   /* weak tractability, i.e. (1, 1)-weak */
} kor_notion;

typedef struct kor_weights kor_weights;
typedef struct kor_problem kor_problem;
typedef struct kor_cursor kor_cursor;
typedef struct kor_report kor_report;
typedef struct kor_curve kor_curve;
typedef struct kor_bounds kor_bounds;
typedef struct kor_oracle kor_oracle;

typedef struct kor_complexity_result {
  uint64_t n;
  int capped; /* nonzero: n is only a certified lower bound (the cap) */
  /* L2 witnesses: n-th and (n+1)-th eigenvalue; NaN for the sup norm */
  double lambda_n;
  double lambda_next;
  /* sup-norm witnesses: eigenvalue tails at n and n-1; NaN for L2 */
  double tail_n;
  double tail_prev;
  double target; /* squared error target the tail was compared against */
} kor_complexity_result;

typedef struct kor_spline_result {
  int overflowed; /* nonzero: m does not fit an integer; use log_m */
  uint64_t m;     /* sufficient sample bound, rounded up */
  uint64_t n;     /* smallest prime >= m */
  double log_m;   /* natural log of the bound before rounding */
} kor_spline_result;

typedef struct kor_curve_cell {
  uint32_t d;
  double eps;
  uint64_t n;
  int capped;
  double runtime_ms;
  int status; /* 0 ok; 1 domain; 2 unsupported; 3 overflow; 4 other failure */
} kor_curve_cell;

typedef struct kor_bounds_cell {
  uint32_t d;
  double eps;
  double lower; /* (1 - eps^2) * total decay sum */
  uint64_t n_norm;
  uint64_t n_abs;
  double spline_lambda;
  double log_spline_m;
  uint64_t spline_n; /* 0 when the spline bound exceeds integer range */
  int spline_overflowed;
  int skipped; /* capped cell, proves nothing */
  int pass;
} kor_bounds_cell;

const char* kor_version(void);

/* Message for the most recent failure on the calling thread. */
const char* kor_last_error(void);

/* ---- numerics ---- */

/* Riemann zeta for s > 1 with a certified absolute error bound. */
kor_status kor_zeta(double s, double* value, double* error_bound);

/* Smallest prime >= m. */
kor_status kor_next_prime(uint64_t m, uint64_t* out);

/* Least-squares slope/intercept of ln y against ln x. */
kor_status kor_fit_loglog(const double* x, const double* y, size_t count, double* slope,
                          double* intercept);

/* ---- weight families ---- */

/* Text forms: "poly:c=1,beta=2", "geo:c=1,q=0.5", "const:g=0.5",
 * "explicit:1,0.5,0.25;repeat-last" (case-insensitive). */
kor_status kor_weights_parse(const char* text, kor_weights** out);
kor_status kor_weights_create_polynomial(double c, double beta, kor_weights** out);
kor_status kor_weights_create_geometric(double c, double q, kor_weights** out);
kor_status kor_weights_create_constant(double g, kor_weights** out);
kor_status kor_weights_create_explicit(const double* values, size_t count, int repeat_last,
                                       kor_weights** out);
void kor_weights_free(kor_weights* w);

/* Canonical text form; fails with KOR_ERROR_INVALID_ARGUMENT if size is too small. */
kor_status kor_weights_describe(const kor_weights* w, char* buffer, size_t size);

kor_status kor_weights_gamma(const kor_weights* w, uint64_t j, double* out);
kor_status kor_weights_infimum(const kor_weights* w, double* value, int* truncated);
kor_status kor_weights_sum_exponent(const kor_weights* w, int* is_infinite, double* value);
kor_status kor_weights_t_exponent(const kor_weights* w, int* is_infinite, double* value);
kor_status kor_weights_u_exponent(const kor_weights* w, double sigma, int* is_infinite,
                                  double* value);

/* ---- problems ---- */

kor_status kor_problem_create(uint32_t dimension, double alpha, const kor_weights* w,
                              kor_norm norm, kor_info_class info_class, kor_criterion criterion,
                              kor_problem** out);
void kor_problem_free(kor_problem* p);

/* ---- spectrum ---- */

/* Decay value at the frequency vector h of length dimension. */
kor_status kor_decay_value(const kor_problem* p, const int64_t* h, size_t length, double* out);

kor_status kor_total_sum(const kor_problem* p, double* out);
kor_status kor_log_total_sum(const kor_problem* p, double* out);

/* Count / sum of eigenvalues strictly above the threshold. capped nonzero means
 * the result is the cap, a certified lower bound. */
kor_status kor_count_above(const kor_problem* p, double threshold, uint64_t cap, uint64_t* count,
                           int* capped);
kor_status kor_sum_above(const kor_problem* p, double threshold, uint64_t cap, double* sum,
                         int* capped);

/* Streams eigenvalue blocks in non-increasing order; KOR_ERROR_CAP_EXCEEDED once
 * emitting the next block would pass the cap. */
kor_status kor_cursor_create(const kor_problem* p, uint64_t cap, kor_cursor** out);
kor_status kor_cursor_next(kor_cursor* c, double* value, uint64_t* multiplicity);
void kor_cursor_free(kor_cursor* c);

/* ---- complexity ---- */

kor_status kor_initial_error(const kor_problem* p, double* out);

/* n-th minimal worst-case error over all linear functionals. */
kor_status kor_minimal_error(const kor_problem* p, uint64_t n, uint64_t cap, double* out);

/* Smallest n with e(n) <= eps * CRI, CRI = 1 (absolute) or initial error (normalized). */
kor_status kor_info_complexity(const kor_problem* p, double eps, uint64_t cap,
                               kor_complexity_result* out);

/* (1 - eps^2) * total decay sum. */
kor_status kor_qpt_lower_bound(const kor_problem* p, double eps, double* out);

/* Sup-norm error bound of the n-point kernel spline algorithm; 1/2 < lambda < alpha/2. */
kor_status kor_spline_error_bound(const kor_problem* p, double lambda, uint64_t n, double* out);

/* Prime sample count sufficient for the spline algorithm to reach absolute error eps. */
kor_status kor_spline_n_sufficient(const kor_problem* p, double eps, double lambda,
                                   kor_spline_result* out);

/* Minimizes the sufficient count over lambda. */
kor_status kor_optimize_spline_lambda(const kor_problem* p, double eps, double* lambda,
                                      kor_spline_result* out);

/* ---- tractability ---- */

/* p is 2, +infinity, or a value in (2, inf); sigma values parameterize the
 * (sigma, tau)-weak notions (tau never affects a verdict). */
kor_status kor_classify(const kor_weights* w, double alpha, double p, kor_info_class info_class,
                        kor_criterion criterion, const double* sigmas, size_t sigma_count,
                        kor_report** out);
void kor_report_free(kor_report* r);

kor_status kor_report_verdict(const kor_report* r, kor_notion notion, int* kind, int* nec,
                              int* suff);
kor_status kor_report_sigma_count(const kor_report* r, size_t* out);
kor_status kor_report_sigma_verdict(const kor_report* r, size_t index, double* sigma, int* kind,
                                    int* nec, int* suff);
kor_status kor_report_tau_star(const kor_report* r, int* present, double* value);
kor_status kor_report_t_star(const kor_report* r, int* present, double* value);
kor_status kor_report_note_count(const kor_report* r, size_t* out);
const char* kor_report_note(const kor_report* r, size_t index);

/* Exponent of strong polynomial tractability (present only for the L2 norm). */
kor_status kor_spt_exponent(const kor_weights* w, double alpha, double p,
                            kor_info_class info_class, int* present, double* value);
/* Exponent of quasi-polynomial tractability (L2 norm, all linear functionals). */
kor_status kor_qpt_exponent(const kor_weights* w, double alpha, int* present, double* value);

/* ---- harness ---- */

/* Distinct decay values over the signed box |h_j| <= box with their counts,
 * sorted by decreasing value. Refuses boxes with more than 1e8 points. */
kor_status kor_brute_force_spectrum(const kor_problem* p, uint32_t box, kor_oracle** out);
kor_status kor_oracle_count(const kor_oracle* o, size_t* out);
kor_status kor_oracle_line(const kor_oracle* o, size_t index, double* value, uint64_t* count);
void kor_oracle_free(kor_oracle* o);

/* Information complexity over a (dimension, eps) grid; threads = 0 uses one per core.
 * Cell values are independent of the thread count. */
kor_status kor_run_curve(const kor_problem* p, const double* eps, size_t eps_count,
                         const uint32_t* dims, size_t dim_count, uint64_t cap, unsigned threads,
                         kor_curve** out);
kor_status kor_curve_cell_count(const kor_curve* c, size_t* out);
kor_status kor_curve_get_cell(const kor_curve* c, size_t index, kor_curve_cell* out);

/* Max over dimensions of the fitted slope of ln n against ln(1/eps). */
kor_status kor_curve_fit(const kor_curve* c, double* tau_hat);
kor_status kor_curve_fit_slope(const kor_curve* c, size_t index, uint32_t* d, double* slope,
                               size_t* dimension_count);
void kor_curve_free(kor_curve* c);

/* Checks lower bound <= n_norm <= n_abs <= spline count on the sup-norm problem. */
kor_status kor_verify_bounds(const kor_problem* p, const double* eps, size_t eps_count,
                             const uint32_t* dims, size_t dim_count, uint64_t cap,
                             kor_bounds** out);
kor_status kor_bounds_cell_count(const kor_bounds* b, size_t* out);
kor_status kor_bounds_get_cell(const kor_bounds* b, size_t index, kor_bounds_cell* out);
kor_status kor_bounds_summary(const kor_bounds* b, int* all_pass, uint32_t* skipped);
void kor_bounds_free(kor_bounds* b);

#ifdef __cplusplus
}
#endif

#endif /* KOROBOV_H */
