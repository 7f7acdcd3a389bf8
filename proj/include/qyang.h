/*
 * qyang - exact symbolic computation in the enveloping superalgebra of the
 * queer Lie superalgebra, with the associated family elements, centralizer
 * projection, Yangian-relation and symmetric-superalgebra verification
 * suites.
 *
 * C API of the shared library. Elements are opaque handles; every function
 * returns a qy_status, with results through out-parameters. Strings returned
 * through char** are heap-allocated and must be released with
 * qy_string_free. On failure qy_last_error() carries a message for the
 * calling thread.
 */
#ifndef QYANG_H
#define QYANG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qy_element qy_element; /* element of U(q_K) */

typedef enum qy_status {
    QY_OK = 0,
    QY_ERR_INVALID_ARGUMENT = 1,
    QY_ERR_INVALID_INDEX = 2,
    QY_ERR_SIZE_MISMATCH = 3,
    QY_ERR_NOT_IN_CENTRALIZER = 4,
    QY_ERR_UNDEFINED_DEGREE = 5,
    QY_ERR_PARSE = 6,
    QY_ERR_CONFIG = 7,
    QY_ERR_INTERNAL = 8
} qy_status;

const char* qy_version(void);
const char* qy_status_name(qy_status status);
const char* qy_last_error(void);

void qy_string_free(char* s);
void qy_element_free(qy_element* e);

/* constructors */
qy_status qy_element_unit(int k, qy_element** out);
qy_status qy_element_generator(int k, int i, int j, qy_element** out);
/* family element F^(n)[i,j] of U(q_k) */
qy_status qy_element_f(int k, int i, int j, int n, qy_element** out);
/* central trace C^(n) of U(q_k) */
qy_status qy_element_c(int k, int n, qy_element** out);
qy_status qy_element_from_json(const char* json, qy_element** out);
qy_status qy_element_clone(const qy_element* e, qy_element** out);

/* arithmetic */
qy_status qy_element_add(const qy_element* a, const qy_element* b, qy_element** out);
qy_status qy_element_sub(const qy_element* a, const qy_element* b, qy_element** out);
qy_status qy_element_mul(const qy_element* a, const qy_element* b, qy_element** out);
qy_status qy_element_supercommutator(const qy_element* a, const qy_element* b, qy_element** out);
qy_status qy_element_scale(const qy_element* a, const char* rational, qy_element** out);
qy_status qy_element_antiautomorphism(const qy_element* a, qy_element** out);
/* re-expresses the element in the order named by tag: "lex" or "hc:K" */
qy_status qy_element_reorder(const qy_element* a, const char* order_tag, qy_element** out);
/* centralizer projection for the splitting K = n + m */
qy_status qy_element_alpha(const qy_element* a, int n, int m, qy_element** out);
/* image of the Yangian generator T^(deg)[i,j] at level m (algebra q_{n+m}) */
qy_status qy_tau(int n, int m, int i, int j, int deg, qy_element** out);

/* queries */
int qy_element_is_zero(const qy_element* e);
int qy_element_equal(const qy_element* a, const qy_element* b);
qy_status qy_element_filtration_degree(const qy_element* e, int* out);
/* 0 or 1; -1 when the element is not homogeneous */
qy_status qy_element_z2_degree(const qy_element* e, int* out);
qy_status qy_element_algebra_size(const qy_element* e, int* out);
qy_status qy_element_centralizer_check(const qy_element* e, int n, int m, int* out);

/* rendering */
qy_status qy_element_to_json(const qy_element* e, char** out);
qy_status qy_element_to_text(const qy_element* e, char** out);

/* symmetric-superalgebra layer (JSON in, JSON out) */
qy_status qy_sym_symbol(const qy_element* e, char** superpoly_json);
qy_status qy_sym_f_symbol(int k, int i, int j, int n, char** superpoly_json);
qy_status qy_sym_c_symbol(int k, int n, char** superpoly_json);
/* tensor schema: {"K":..,"n":..,"terms":[{"coeff":"p/q","slots":[{"i":..,"j":..},..]},..]} */
qy_status qy_sym_phi(const char* tensor_json, char** superpoly_json);
/* gens_json: [{"i":..,"j":..},...] */
qy_status qy_sym_psi(int k, const char* gens_json, char** tensor_json);

/* free-algebra expansions for inspection: config
 * {"kind":"defrel"|"rel37"|"rel38"|"comult","m":..,"n":..,"i":..,"j":..,"k":..,"l":..,"N":..} */
qy_status qy_yang_expand(const char* config_json, char** result_json);

/* verification suites: config
 * {"suite":"fnr","K":2,"nmax":4,"jobs":1,...}; the report is returned even
 * when it contains failures (failures are results, not errors) */
qy_status qy_verify(const char* config_json, char** report_json);
/* runs every suite of a profile ("desk"); summary JSON with all reports */
qy_status qy_verify_all(const char* profile, uint64_t seed, int jobs, char** summary_json);

#ifdef __cplusplus
}
#endif

#endif /* QYANG_H */
