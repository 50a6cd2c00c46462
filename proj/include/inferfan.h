#ifndef INFERFAN_H
#define INFERFAN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Return codes shared by every entry point. */
#define IFN_OK 0
#define IFN_ERROR 1        /* internal failure */
#define IFN_BAD_INPUT 2    /* invalid argument, model, or observation */
#define IFN_CAP_EXCEEDED 3 /* instance larger than the requested cap */

/* Opaque model handle. */
typedef struct ifn_model ifn_model;

/* Message for the calling thread's most recent failure; never NULL. */
const char* ifn_last_error(void);

/* Frees a string returned through any char** out parameter. */
void ifn_string_free(char* s);

void ifn_model_free(ifn_model* m);

/* Homogeneous hidden Markov chain: n positions, l hidden and lp observed
 * symbols, one parameter per transition and per emission. */
int ifn_model_hmm(long long n, long long l, long long lp, ifn_model** out);

/* Two-chain construction with d parameters and n positions whose block
 * observations each have exactly two explanations. */
int ifn_model_lowerbound(long long d, long long n, ifn_model** out);

/* Pair model over {0,1} sequences of lengths n1 and n2 with parameters
 * (mismatch, space, match). */
int ifn_model_alignment(long long n1, long long n2, ifn_model** out);

int ifn_model_from_json(const char* json, ifn_model** out);
int ifn_model_to_json(const ifn_model* m, char** out);

/* One line: name, kind, d, alphabet sizes, variable counts. */
int ifn_model_info(const ifn_model* m, char** out);

/* Best explanation of observation tau at log-parameters v. tau is one token
 * per observed position ('|' allowed between the two sequences of a pair
 * model); v holds d whitespace- or comma-separated rationals like "3" or
 * "-1/2". Output line: h=... exponent=e1,...,ed score=p/q */
int ifn_viterbi(const ifn_model* m, const char* tau, const char* v, char** out);

/* Observation polytope of tau. Output: a header line "dim nverts", one
 * vertex per line, then one line "w <hidden data>" per vertex in the same
 * order. */
int ifn_polytope(const ifn_model* m, const char* tau, char** out);

/* Counts inference functions by summing the distinct observation polytopes.
 * Fails with IFN_CAP_EXCEEDED when the observation space exceeds cap.
 * jobs > 1 parallelizes without changing the output. */
int ifn_count(const ifn_model* m, uint64_t cap, int jobs, char** out);

/* Monte Carlo census: samples random integer directions and counts distinct
 * observation-to-winner tables. */
int ifn_sample(const ifn_model* m, uint64_t samples, uint64_t seed, uint64_t cap,
               char** out);

/* Bound report line for edge-class count m, complexity M, dimension d.
 * Pass m < 0 or M < 0 to leave the corresponding inputs and bounds out. */
int ifn_bound(long long m, long long M, long long d, char** out);

/* Chambers of the arrangement of hyperplanes a . x = 0 over primitive a >= 1
 * with coordinate sum below n; want_rays additionally reports the maximum
 * number of extreme rays over chambers (d = 3 needs n <= 6). */
int ifn_arrangement(long long d, long long n, int want_rays, char** out);

/* Probability that a random m x d matrix with entries in [0, box] has
 * coprime maximal minors, from `samples` draws. */
int ifn_primitive_probability(long long d, long long m, long long box,
                              uint64_t samples, uint64_t seed, char** out);

/* Rational bracket around prod_{j=d-m+1}^d 1/zeta(j), width at most 1e-6. */
int ifn_zeta_reference(long long d, long long m, char** out);

/* 2-D alignment polygon of the pair, in the format of ifn_polytope's header
 * and vertex lines. */
int ifn_align_polygon(const char* s1, const char* s2, char** out);

/* Same polygon as a standalone SVG document. */
int ifn_align_polygon_svg(const char* s1, const char* s2, char** out);

/* Best alignment under score = matches - alpha mismatches - beta spaces;
 * alpha and beta are rationals like "3/4". */
int ifn_align_best(const char* s1, const char* s2, const char* alpha,
                   const char* beta, char** out);

/* Census over all binary pairs of length n (n <= 10). */
int ifn_align_count(long long n, char** out);

/* Chambers meeting the meaningful scoring directions (alpha, beta >= 0;
 * alpha_le_beta restricts to alpha <= beta). */
int ifn_align_meaningful(long long n, int alpha_le_beta, char** out);

/* Slopes u/v realizable at length n. */
int ifn_align_slopes(long long n, char** out);

/* The padded pair carrying an edge of slope u/v at length n. */
int ifn_slope_family(long long u, long long v, long long n, char** out);

#ifdef __cplusplus
}
#endif

#endif
