/* spherezeta: spectral zeta functions of k-spheres and real projective
 * spaces. Exact coefficient tables, residues and special values as
 * arbitrary-precision rationals (serialized as decimal "num/den" strings),
 * plus error-controlled numeric evaluation of the analytic continuation.
 *
 * All functions take an opaque context handle; contexts are cheap, own the
 * last-error state, and must not be shared between threads without external
 * synchronization. Returned strings are heap-allocated; release them with
 * spz_string_free / spz_string_array_free.
 */
#ifndef SPHEREZETA_H
#define SPHEREZETA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct spz_context spz_context;

typedef enum spz_status {
  SPZ_OK = 0,
  SPZ_ERR_USAGE = 1,       /* malformed argument (k < 2, n < 0, bad enum, NULL) */
  SPZ_ERR_DOMAIN = 2,      /* numeric precondition violated */
  SPZ_ERR_AT_POLE = 3,     /* point sits on a true pole; see spz_last_pole */
  SPZ_ERR_POLE_AT_ONE = 4, /* Hurwitz zeta at s = 1 */
  SPZ_ERR_UNSUPPORTED = 5, /* no closed form (projective even-k special value) */
  SPZ_ERR_INTERNAL = 6
} spz_status;

typedef enum spz_space { SPZ_SPHERE = 0, SPZ_PROJECTIVE = 1 } spz_space;

typedef enum spz_method {
  SPZ_METHOD_EXPANSION = 0,
  SPZ_METHOD_STIRLING = 1,
  SPZ_METHOD_RECURSION = 2
} spz_method;

/* spz_eval_result.flags */
#define SPZ_FLAG_TRUNCATED 1u
#define SPZ_FLAG_NEAR_CANCELLATION 2u
#define SPZ_FLAG_EXACT_ROUTED 4u

typedef struct spz_options {
  double tol;      /* target absolute error, default 1e-12 */
  int max_l;       /* continuation series cap, default 200 */
  double pole_eps; /* rejection radius around true poles, default 1e-8 */
  int em_order;    /* Euler-Maclaurin correction order (even >= 2), default 12 */
} spz_options;

typedef struct spz_eval_result {
  double value_re, value_im;
  double error_bound;
  long terms_used;
  unsigned flags;
} spz_eval_result;

spz_context *spz_context_new(void);
void spz_context_free(spz_context *ctx);

/* Static name for a status code ("ok", "usage", ...). */
const char *spz_status_name(spz_status st);

/* Message for the most recent failing call on this context. */
const char *spz_last_error(const spz_context *ctx);

void spz_options_init(spz_options *opts);

void spz_string_free(char *s);
void spz_string_array_free(char **arr, size_t len);

/* ---- exact surface (rationals as "num" or "num/den" decimal strings) ---- */

spz_status spz_stirling_first(spz_context *ctx, long n, long m, char **out);
spz_status spz_multiplicity(spz_context *ctx, int k, long n, char **out);
spz_status spz_bernoulli_number(spz_context *ctx, long n, char **out);

/* Coefficient row B_{k,j}, j = 0..k-1 (out gets k strings). */
spz_status spz_coefficient_table(spz_context *ctx, int k, spz_method method, char ***out,
                                 size_t *out_len);
/* 1 iff the three computation methods give identical tables for this k. */
spz_status spz_coefficient_methods_agree(spz_context *ctx, int k, int *out_agree);

/* Residue at s = k/2 - n ("0" at regular points). */
spz_status spz_residue(spz_context *ctx, spz_space space, int k, long n, char **out);
/* Location k/2 - n as a rational string. */
spz_status spz_pole_location(spz_context *ctx, int k, long n, char **out);
/* Exact value at s = -n; SPZ_ERR_UNSUPPORTED for projective even k. */
spz_status spz_special_value(spz_context *ctx, spz_space space, int k, long n, char **out);

/* Per-check callback: pass is 0/1, detail may be "". */
typedef void (*spz_check_fn)(const char *name, int pass, const char *detail, void *user);

/* Exact identity checks for one k (Theorem-12-style sums). */
spz_status spz_check_identities(spz_context *ctx, int k, spz_check_fn cb, void *user,
                                int *out_all_pass);

/* Full self-verification: exact checks for k <= k_max, numeric cross-checks
 * for k <= min(k_max, 6) at tolerance tol. */
spz_status spz_verify(spz_context *ctx, int k_max, double tol, spz_check_fn cb, void *user,
                      int *out_all_pass);

/* ---- numeric surface ---- */

spz_status spz_hurwitz_zeta(spz_context *ctx, double s_re, double s_im, double a,
                            const spz_options *opts, spz_eval_result *out);
spz_status spz_riemann_zeta(spz_context *ctx, double s_re, double s_im,
                            const spz_options *opts, spz_eval_result *out);

/* Analytic continuation of Z_k / L_k. On SPZ_ERR_AT_POLE the exact residue
 * and pole location are retrievable via spz_last_pole. */
spz_status spz_zeta_eval(spz_context *ctx, spz_space space, int k, double s_re, double s_im,
                         const spz_options *opts, spz_eval_result *out);

spz_status spz_last_pole(const spz_context *ctx, char **residue, char **location);

/* Partial Dirichlet sum with a rigorous tail bound; Re s > k/2 + 1/4. */
spz_status spz_dirichlet_oracle(spz_context *ctx, spz_space space, int k, double s_re,
                                double s_im, long n_terms, const spz_options *opts,
                                spz_eval_result *out);

/* Richardson estimate of the residue at s = k/2 - n; eps in (0, 0.1). */
spz_status spz_residue_numeric(spz_context *ctx, spz_space space, int k, long n, double eps,
                               const spz_options *opts, double *out_re, double *out_im);

/* psi(num/den) for den 1 or 2, num/den > 0. */
spz_status spz_digamma_half_integer(spz_context *ctx, long num, long den, double *out);

#ifdef __cplusplus
}
#endif

#endif /* SPHEREZETA_H */
