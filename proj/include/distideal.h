/* C API for the distideal library: exact distance ideals, Smith normal
 * forms, and pattern classification of strong digraphs.
 *
 * All functions return DI_OK (0) on success or a negative error code; the
 * message for the most recent failure on the calling thread is available
 * via di_last_error(). Strings returned through char** are heap-allocated
 * and must be released with di_string_free(). */
#ifndef DISTIDEAL_H
#define DISTIDEAL_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct di_digraph di_digraph;

typedef enum {
    DI_OK = 0,
    DI_ERR_ARGUMENT = -1,   /* bad parameter or range */
    DI_ERR_PARSE = -2,      /* malformed input text */
    DI_ERR_NOT_STRONG = -3, /* operation requires a strong digraph */
    DI_ERR_CAP = -4,        /* enumeration or iteration cap exceeded */
    DI_ERR_INTERNAL = -5
} di_status;

typedef enum {
    DI_MATRIX_D = 0,
    DI_MATRIX_DL = 1,
    DI_MATRIX_DQ = 2,
    DI_MATRIX_DDEG = 3,
    DI_MATRIX_DDEG_PLUS = 4
} di_matrix_kind;

const char* di_last_error(void);
void di_string_free(char* s);

/* --- digraph construction ------------------------------------------------ */

di_status di_digraph_parse(const char* text, di_digraph** out);
di_status di_digraph_from_arcs(int n, const int32_t* arcs, size_t arc_count,
                               di_digraph** out);
di_status di_digraph_circuit(int n, di_digraph** out);
di_status di_digraph_complete(int n, di_digraph** out);
di_status di_digraph_complete_bipartite(int m, int n, di_digraph** out);
di_status di_digraph_lambda(int a, int b, int c, int d, di_digraph** out);
void di_digraph_free(di_digraph* g);

int di_digraph_order(const di_digraph* g);
int di_digraph_is_strong(const di_digraph* g);
di_status di_digraph_diameter(const di_digraph* g, int* out);
di_status di_digraph_format(const di_digraph* g, char** out);

/* --- computations --------------------------------------------------------- */

di_status di_distance_matrix(const di_digraph* g, di_matrix_kind kind, char** out);

/* Smith normal form diagonal of the selected matrix, comma separated. */
di_status di_snf(const di_digraph* g, di_matrix_kind kind, char** out);

/* Generators (or, with groebner != 0, a strong Groebner basis) of the k-th
 * distance ideal, one polynomial per line. With univariate != 0 the
 * univariate ideal over t is used. eval_point, when non-NULL, is a comma
 * separated full assignment; the gcd of generator evaluations is written
 * instead. */
di_status di_ideal(const di_digraph* g, int k, int univariate, int groebner,
                   const char* eval_point, char** out);

/* Classification against the one-trivial-ideal family; text or JSON. */
di_status di_classify(const di_digraph* g, int as_json, char** out);

/* Verification suites: theorem-equi, eval-consistency, circuit-snf,
 * lambda-ideals, conjecture, diameter-lemma, pattern-lemmas.
 * failures receives the number of FAIL/ERROR records. */
di_status di_verify(const char* suite, int n_max, int threads, uint64_t seed,
                    int as_json, char** report, int* failures);

/* Closed-form family output: family is one of complete, star, lambda-ab01,
 * lambda-a10d, second-ideal, circuit-third, circuit-snf, lambda-snf,
 * conjecture; p1..p4 are its positional parameters (unused ones 0). */
di_status di_family(const char* family, int p1, int p2, int p3, int p4, char** out);

#ifdef __cplusplus
}
#endif

#endif /* DISTIDEAL_H */
