/* C interface to the tensorcone library.
 *
 * All structured inputs and outputs are JSON strings:
 *   weight     {"family":"B","rank":2,"coords":["3/2","1/2"]}
 *   partition  [3,2,1]
 *   reports/verdicts carry {"schema":"tensorcone/1", ...}
 * Strings returned through char** out parameters are owned by the caller and
 * must be released with tc_string_free. On any status other than TC_OK the
 * out parameters are untouched and tc_last_error(ctx) describes the failure.
 * A context is not thread-safe; use one context per thread.
 */
#ifndef TENSORCONE_H
#define TENSORCONE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tc_context tc_context;

typedef enum tc_status {
    TC_OK = 0,
    TC_ERR_INVALID_ARGUMENT = 1,
    TC_ERR_RESOURCE_LIMIT = 2,
    TC_ERR_INTERNAL = 3,
} tc_status;

/* cache_dir may be NULL (no on-disk multiplicity cache). */
tc_context* tc_context_new(const char* cache_dir);
void tc_context_free(tc_context* ctx);
const char* tc_last_error(const tc_context* ctx);
void tc_string_free(char* s);
const char* tc_version(void);

/* Builds canonical weight JSON from a family letter, rank, and coordinates
 * given as comma-separated rationals, e.g. "3/2,1/2". */
tc_status tc_weight_json(tc_context* ctx, const char* family, int rank, const char* coords,
                         char** out_json);

/* Vertex table of the dominant weight polytope D_lambda. */
tc_status tc_vertex_table(tc_context* ctx, const char* weight_json, char** out_json);

/* Dominance order with certificate; out_member is 0 or 1. */
tc_status tc_dominates(tc_context* ctx, const char* lam_json, const char* mu_json, int* out_member,
                       char** out_certificate_json);

/* Littlewood-Richardson coefficient of three partition JSON arrays. */
tc_status tc_lr_coefficient(tc_context* ctx, const char* lam_json, const char* mu_json,
                            const char* nu_json, long long* out_value);

/* Tensor product multiplicity c_{lam,mu}^{nu} (dominant integral weights). */
tc_status tc_tensor_multiplicity(tc_context* ctx, const char* lam_json, const char* mu_json,
                                 const char* nu_json, long long* out_value);

/* Full decomposition of V_lam (x) V_mu as JSON. */
tc_status tc_tensor_decompose(tc_context* ctx, const char* lam_json, const char* mu_json,
                              char** out_json);

/* dim V_lambda as a decimal string. */
tc_status tc_weyl_dimension(tc_context* ctx, const char* weight_json, char** out_dim);

/* Saturated tensor cone membership verdicts with certificates. */
tc_status tc_horn_member(tc_context* ctx, const char* lam_json, const char* mu_json,
                         const char* nu_json, char** out_verdict_json);
tc_status tc_ext_horn_member(tc_context* ctx, const char* lam_json, const char* mu_json,
                             const char* nu_json, char** out_verdict_json);
tc_status tc_saturated_member(tc_context* ctx, const char* lam_json, const char* mu_json,
                              const char* nu_json, int* out_member);

/* Schubert structure constant; permutations in one-line notation, e.g. "1423". */
tc_status tc_schubert_constant(tc_context* ctx, const char* u, const char* v, const char* w,
                               long long* out_value);

/* Equality report for D_{2 lam} = T_lam; out_equal is 0 or 1. */
tc_status tc_verify(tc_context* ctx, const char* weight_json, int* out_equal, char** out_report_json);

/* Sweep over all dominant integral weights with coordinates bounded. */
tc_status tc_sweep(tc_context* ctx, const char* family, int rank, int bound, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TENSORCONE_H */
