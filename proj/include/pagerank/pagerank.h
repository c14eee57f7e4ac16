/*
 Copyright 2026 The pagerank-toolkit Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#ifndef PAGERANK_PAGERANK_H
#define PAGERANK_PAGERANK_H

/*
 * C interface to the PageRank toolkit.
 *
 * Conventions:
 *   - Every fallible call returns a pr_status; on failure pr_last_error()
 *     describes the problem for the calling thread.
 *   - Output arrays are caller-allocated. Vector outputs have the length of
 *     the graph or operator; dense matrices are row-major.
 *   - Handles are opaque and must be released with the matching _free call.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PR_API __declspec(dllexport)
#else
#define PR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pr_status {
    PR_OK = 0,
    PR_ERR_VALIDATION = 1,
    PR_ERR_CONVERGENCE = 2,
    PR_ERR_PARSE = 3,
    PR_ERR_IO = 4,
    PR_ERR_DEGENERATE = 5,
    PR_ERR_SINGULAR = 6,
    PR_ERR_INTERNAL = 7
} pr_status;

typedef struct pr_graph pr_graph;
typedef struct pr_operator pr_operator;

typedef struct pr_info {
    size_t iterations;
    double residual; /* final ‖x^(k+1) - x^(k)‖₁ */
    double scale;    /* normalization factor applied, 1 if none */
} pr_info;

PR_API const char* pr_last_error(void);
PR_API const char* pr_status_name(pr_status status);
PR_API const char* pr_version(void);

/* ---- graphs ---- */

/* format: 0 = from extension (".mtx" is matrix-market), 1 = edge list, 2 = matrix-market. */
PR_API pr_status pr_graph_load(const char* path, int format, int undirected, pr_graph** out);
/* weights may be NULL (all 1). */
PR_API pr_status pr_graph_from_edges(size_t num_nodes, const size_t* src, const size_t* dst, const double* weights,
                                     size_t num_edges, int undirected, pr_graph** out);
PR_API void pr_graph_free(pr_graph* g);
PR_API size_t pr_graph_num_nodes(const pr_graph* g);
PR_API size_t pr_graph_num_edges(const pr_graph* g);
PR_API int pr_graph_is_directed(const pr_graph* g);
PR_API pr_status pr_graph_out_degrees(const pr_graph* g, double* out);
PR_API pr_status pr_graph_in_degrees(const pr_graph* g, double* out);
PR_API pr_status pr_graph_is_connected(const pr_graph* g, int* out);
PR_API pr_status pr_graph_is_strongly_connected(const pr_graph* g, int* out);
/* Edge list with a "# nodes N" header; path NULL writes to stdout. */
PR_API pr_status pr_graph_write(const pr_graph* g, const char* path);

/* ---- operators ---- */

typedef enum pr_walk { PR_WALK_RANDOM = 0, PR_WALK_REVERSE = 1, PR_WALK_WEIGHTED = 2 } pr_walk;

typedef enum pr_correction {
    PR_CORRECTION_NONE = 0,
    PR_CORRECTION_STRONG = 1,
    PR_CORRECTION_WEAK = 2,
    PR_CORRECTION_SINK = 3
} pr_correction;

/* node_weights is required for PR_WALK_WEIGHTED and ignored otherwise. dist is
 * v (strong) or u (weak); NULL means uniform. */
PR_API pr_status pr_operator_create(const pr_graph* g, pr_walk walk, const double* node_weights,
                                    pr_correction correction, const double* dist, pr_operator** out);
PR_API void pr_operator_free(pr_operator* op);
PR_API size_t pr_operator_size(const pr_operator* op);
PR_API int pr_operator_is_stochastic(const pr_operator* op);
PR_API pr_status pr_operator_apply(const pr_operator* op, const double* x, double* y);
/* Dangling deficit c = e - P̄ᵀe of the uncorrected walk. */
PR_API pr_status pr_operator_correction(const pr_operator* op, double* c);
/* n x n row-major; n <= 2000. */
PR_API pr_status pr_operator_to_dense(const pr_operator* op, double* out);

/* ---- solvers ---- */

/* v NULL means uniform. */
PR_API pr_status pr_solve(const pr_operator* op, double alpha, const double* v, double tol, int zero_start, double* x,
                          pr_info* info);
/* Uses only the uncorrected walk P̄ of op. normalize != 0 returns y / eᵀy. */
PR_API pr_status pr_solve_pseudo(const pr_operator* op, double alpha, const double* f, double tol, int normalize,
                                 double* y, pr_info* info);
/* Fixes x on `nodes` to `values` and solves for the rest; x has full length. */
PR_API pr_status pr_solve_dirichlet(const pr_operator* op, double alpha, const size_t* nodes, const double* values,
                                    size_t count, const double* v, double tol, double* x, pr_info* info);
/* Dense direct solve of (I - αP) x = (1-α) v; n <= 2000. */
PR_API pr_status pr_solve_dense(const pr_operator* op, double alpha, const double* v, double* x);

/* ---- generalized diffusions ---- */

PR_API pr_status pr_totalrank(const pr_operator* op, const double* v, double tol, double* x, size_t* terms);
PR_API pr_status pr_heat_kernel(const pr_operator* op, double beta, const double* f, double tol, double* x,
                                size_t* terms);
/* E[x(A)] for A ~ Uniform[a, b]. */
PR_API pr_status pr_expected_uniform(const pr_operator* op, double a, double b, const double* v, double tol,
                                     double* x, size_t* terms);
/* x holds 2n doubles, interleaved (re, im). bound = |1-α| / (1-|α|). */
PR_API pr_status pr_solve_complex(const pr_operator* op, double alpha_re, double alpha_im, const double* v,
                                  double tol, double* x, double* bound, pr_info* info);

/* ---- spectral ---- */

PR_API pr_status pr_fiedler(const pr_graph* g, double* lambda_star, size_t* multiplicity, double* q);
/* project != 0 removes the D-weighted mean of seed first. */
PR_API pr_status pr_mov(const pr_graph* g, const double* seed, double gamma, int project, double* r, double* rho);

/* ---- censored chains ---- */

/* Censored teleport-node construction: solves the pseudo problem with
 * P̄' = Aᵀ(D+I)⁻¹ and renormalizes. */
PR_API pr_status pr_censored(const pr_graph* g, const double* v, double tol, double* x, double* alpha_implied,
                             pr_info* info);
/* Stationary distribution of [αP v; (1-α)eᵀ 0] with the teleport state censored. */
PR_API pr_status pr_censored_chain(const pr_operator* op, double alpha, const double* v, double tol, double* x,
                                   pr_info* info);
PR_API pr_status pr_colley(const pr_graph* g, const double* f, double* ratings, double* alpha, double* route_gap);

/* ---- IsoRank ---- */

/* sim is n x m row-major with unit mass, NULL for uniform; x is n x m row-major. */
PR_API pr_status pr_isorank(const pr_graph* a, const pr_graph* b, double alpha, const double* sim, double tol,
                            double* x, pr_info* info);
/* Greedy matching on an n x m row-major score matrix. Arrays hold min(n, m)
 * entries; *count receives the number written. */
PR_API pr_status pr_greedy_match(const double* x, size_t n, size_t m, size_t* rows, size_t* cols, double* scores,
                                 size_t* count);

/* ---- Ulam networks ---- */

typedef struct pr_chirikov_config {
    double eta;
    double k;
    size_t periods;
    size_t cells;
    size_t samples;
    uint64_t seed;
} pr_chirikov_config;

typedef enum pr_ulam_variant { PR_ULAM_PAGERANK = 0, PR_ULAM_WEIGHTED = 1, PR_ULAM_REVERSE = 2 } pr_ulam_variant;

PR_API void pr_chirikov_default(pr_chirikov_config* cfg);
PR_API pr_status pr_chirikov_step(const pr_chirikov_config* cfg, double x, double y, double* x_out, double* y_out);
PR_API pr_status pr_ulam_build(const pr_chirikov_config* cfg, pr_graph** out);
PR_API pr_status pr_ulam_scores(const pr_graph* g, pr_ulam_variant variant, double alpha, double tol, double* x,
                                pr_info* info);
/* Cube-root grayscale PGM of n x n scores. *all_zero is set when every score is 0. */
PR_API pr_status pr_write_heatmap(const double* scores, size_t n, const char* path, int* all_zero);

/* ---- output ---- */

/* "node<TAB>score" lines; path NULL writes to stdout. */
PR_API pr_status pr_write_scores(const double* x, size_t n, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* PAGERANK_PAGERANK_H */
