/* framecomplex: exact symbolic calculus for vector-valued differential forms
 * on higher-order frame bundles.
 *
 * C interface to the shared library. All objects are opaque handles owned by
 * the caller; every *_free accepts NULL. Functions returning fcx_status use
 *   FCX_OK           success
 *   FCX_VERIFY_FAIL  a checked identity does not hold (report explains)
 *   FCX_PARSE_ERROR  malformed expression or form document
 *   FCX_DOMAIN_ERROR invalid index, shape mismatch, violated precondition
 * and the last error message is kept per thread in fcx_last_error().
 * Strings returned through char** or char* are heap-allocated; release them
 * with fcx_string_free.
 */
#ifndef FRAMECOMPLEX_H
#define FRAMECOMPLEX_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fcx_status {
  FCX_OK = 0,
  FCX_VERIFY_FAIL = 1,
  FCX_PARSE_ERROR = 2,
  FCX_DOMAIN_ERROR = 3
} fcx_status;

typedef struct fcx_context fcx_context; /* the bundle data (m, n) */
typedef struct fcx_expr fcx_expr;       /* polynomial in jet coordinates */
typedef struct fcx_form fcx_form;       /* vector-valued differential form */

const char* fcx_version(void);
const char* fcx_last_error(void); /* valid until the next failing call on this thread */
void fcx_string_free(char* text);

/* ------------------------------------------------------------------ context */

fcx_context* fcx_context_new(int frame_dim_m, int fiber_dim_n);
void fcx_context_free(fcx_context* ctx);
int fcx_context_m(const fcx_context* ctx);
int fcx_context_n(const fcx_context* ctx);
/* dim F^k_(m)E = n * C(m+k, k); returns -1 on error */
long long fcx_dimension(const fcx_context* ctx, int order);

/* -------------------------------------------------------------- expressions */

/* Grammar: sums/products/powers of rationals "p/q" and coordinates
 * "u[alpha;i1 i2 ...]" with symmetric direction lists. */
fcx_status fcx_expr_parse(const fcx_context* ctx, const char* text, fcx_expr** out);
void fcx_expr_free(fcx_expr* expr);
/* format: "plain" | "latex" | "json"; NULL on error */
char* fcx_expr_render(const fcx_expr* expr, const char* format);
int fcx_expr_order(const fcx_expr* expr);
int fcx_expr_equal(const fcx_expr* a, const fcx_expr* b);

/* -------------------------------------------------------------------- forms */

fcx_status fcx_form_parse_json(const char* document, fcx_form** out);
void fcx_form_free(fcx_form* form);
char* fcx_form_render(const fcx_form* form, const char* format);
int fcx_form_degree(const fcx_form* form);
int fcx_form_covalence(const fcx_form* form);
int fcx_form_order(const fcx_form* form);
int fcx_form_is_zero(const fcx_form* form);
int fcx_form_equal(const fcx_form* a, const fcx_form* b);

/* ------------------------------------------------------- exterior calculus */

fcx_status fcx_form_d(const fcx_form* form, fcx_form** out);
fcx_status fcx_form_dT(const fcx_form* form, fcx_form** out);
fcx_status fcx_form_P(const fcx_form* form, fcx_form** out);
fcx_status fcx_form_add(const fcx_form* a, const fcx_form* b, fcx_form** out);
fcx_status fcx_form_wedge(const fcx_form* a, const fcx_form* b, fcx_form** out);
/* dT P(phi) + P dT(phi) - phi; degree >= 1, covalence <= m-1 */
fcx_status fcx_form_homotopy_residual(const fcx_form* form, fcx_form** out);
/* (psi, phi1) with form = d(psi) + dT(phi1); preconditions per the splitting
 * lemmas, violations reported as FCX_DOMAIN_ERROR */
fcx_status fcx_form_split(const fcx_form* form, fcx_form** psi, fcx_form** phi1);

/* -------------------------------------------------- variational constructions */

/* epsilon tensor d^m t computed by two independent routes; *routes_agree is 1
 * when they match exactly (they must; 0 signals a verification failure). */
fcx_status fcx_euler_lagrange(const fcx_context* ctx, int order, const fcx_expr* density,
                              fcx_form** epsilon, int* routes_agree);
/* Hilbert form theta^i = P^i_(1) dL for one direction i in 1..m */
fcx_status fcx_hilbert(const fcx_context* ctx, int order, const fcx_expr* density,
                       int direction, fcx_form** theta);
/* *homogeneous is 1/0; report lists violated conditions (may be empty) */
fcx_status fcx_check_homogeneous(const fcx_context* ctx, int order, const fcx_expr* density,
                                 int* homogeneous, char** report);
/* H(source) = d(source) - dT P d(source); source: degree 1, covalence m */
fcx_status fcx_helmholtz(const fcx_form* source, fcx_form** out);
/* Theta_m = (Pd)^m Lambda with a projectability / route-comparison report */
fcx_status fcx_fundamental_form(const fcx_context* ctx, int order, const fcx_expr* density,
                                fcx_form** theta, char** report);

/* ------------------------------------------------------------- verification */

/* Randomized exact checks; FCX_OK or FCX_VERIFY_FAIL, report always set. */
fcx_status fcx_verify_homotopy(const fcx_context* ctx, int order, int degree, int covalence,
                               int cases, unsigned long long seed, char** report);
fcx_status fcx_verify_lemmas(const fcx_context* ctx, int order, int cases,
                             unsigned long long seed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* FRAMECOMPLEX_H */
