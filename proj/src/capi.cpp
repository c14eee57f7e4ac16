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

#include "pagerank/pagerank.h"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "pagerank/censored.hpp"
#include "pagerank/construct.hpp"
#include "pagerank/generalized.hpp"
#include "pagerank/isorank.hpp"
#include "pagerank/solver.hpp"
#include "pagerank/spectral.hpp"
#include "pagerank/ulam.hpp"

using namespace pagerank;

struct pr_graph {
    Graph g;
};

struct pr_operator {
    StochasticOperator op;
};

namespace {

thread_local std::string g_last_error;

template <class F>
pr_status guard(F&& body) {
    try {
        body();
        g_last_error.clear();
        return PR_OK;
    } catch (const ValidationError& e) {
        g_last_error = e.what();
        return PR_ERR_VALIDATION;
    } catch (const ConvergenceError& e) {
        g_last_error = e.what();
        return PR_ERR_CONVERGENCE;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return PR_ERR_PARSE;
    } catch (const IoError& e) {
        g_last_error = e.what();
        return PR_ERR_IO;
    } catch (const DegenerateError& e) {
        g_last_error = e.what();
        return PR_ERR_DEGENERATE;
    } catch (const SingularError& e) {
        g_last_error = e.what();
        return PR_ERR_SINGULAR;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PR_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PR_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return PR_ERR_INTERNAL;
    }
}

void require(const void* p, const char* name) {
    if (p == nullptr) throw ValidationError(std::string(name) + " must not be NULL");
}

std::vector<double> vec(const double* p, std::size_t n) { return std::vector<double>(p, p + n); }

std::vector<double> vec_or_uniform(const double* p, std::size_t n) {
    return p == nullptr ? uniform_distribution(n) : vec(p, n);
}

void copy_out(std::span<const double> src, double* dst) { std::copy(src.begin(), src.end(), dst); }

void fill_info(pr_info* info, const Solution& s) {
    if (info == nullptr) return;
    info->iterations = s.iterations;
    info->residual = s.residual_1norm;
    info->scale = s.scale;
}

SolveOptions options(double tol, bool zero_start = false) {
    SolveOptions o;
    o.tol = tol;
    o.start = zero_start ? StartVector::zero : StartVector::teleport;
    return o;
}

ChirikovConfig to_config(const pr_chirikov_config& c) {
    ChirikovConfig cfg;
    cfg.eta = c.eta;
    cfg.k = c.k;
    cfg.periods = c.periods;
    cfg.cells = c.cells;
    cfg.samples = c.samples;
    cfg.seed = c.seed;
    return cfg;
}

DenseMatrix from_row_major(const double* p, std::size_t n, std::size_t m) {
    DenseMatrix out(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) out(i, j) = p[i * m + j];
    }
    return out;
}

template <class Writer>
void write_to(const char* path, Writer&& w) {
    if (path == nullptr) {
        w(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError(std::string("cannot open ") + path + " for writing");
    w(out);
    if (!out) throw IoError(std::string("failed writing ") + path);
}

}  // namespace

extern "C" {

const char* pr_last_error(void) { return g_last_error.c_str(); }

const char* pr_status_name(pr_status status) {
    switch (status) {
        case PR_OK: return "ok";
        case PR_ERR_VALIDATION: return "validation error";
        case PR_ERR_CONVERGENCE: return "convergence failure";
        case PR_ERR_PARSE: return "parse error";
        case PR_ERR_IO: return "I/O error";
        case PR_ERR_DEGENERATE: return "degenerate input";
        case PR_ERR_SINGULAR: return "singular system";
        case PR_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* pr_version(void) { return "1.0.0"; }

pr_status pr_graph_load(const char* path, int format, int undirected, pr_graph** out) {
    return guard([&] {
        require(path, "path");
        require(out, "out");
        GraphFormat f;
        switch (format) {
            case 0: f = format_from_path(path); break;
            case 1: f = GraphFormat::edge_list; break;
            case 2: f = GraphFormat::matrix_market; break;
            default: throw ValidationError("unknown graph format code");
        }
        *out = new pr_graph{load_graph(path, f, undirected == 0)};
    });
}

pr_status pr_graph_from_edges(size_t num_nodes, const size_t* src, const size_t* dst, const double* weights,
                              size_t num_edges, int undirected, pr_graph** out) {
    return guard([&] {
        require(out, "out");
        if (num_edges > 0) {
            require(src, "src");
            require(dst, "dst");
        }
        std::vector<Edge> edges(num_edges);
        for (size_t e = 0; e < num_edges; ++e) edges[e] = {src[e], dst[e], weights ? weights[e] : 1.0};
        *out = new pr_graph{Graph::from_edges(num_nodes, edges, undirected == 0)};
    });
}

void pr_graph_free(pr_graph* g) { delete g; }
size_t pr_graph_num_nodes(const pr_graph* g) { return g ? g->g.num_nodes() : 0; }
size_t pr_graph_num_edges(const pr_graph* g) { return g ? g->g.num_edges() : 0; }
int pr_graph_is_directed(const pr_graph* g) { return g && g->g.directed() ? 1 : 0; }

pr_status pr_graph_out_degrees(const pr_graph* g, double* out) {
    return guard([&] {
        require(g, "graph");
        require(out, "out");
        copy_out(degrees(g->g).out_degrees, out);
    });
}

pr_status pr_graph_in_degrees(const pr_graph* g, double* out) {
    return guard([&] {
        require(g, "graph");
        require(out, "out");
        copy_out(in_degrees(g->g), out);
    });
}

pr_status pr_graph_is_connected(const pr_graph* g, int* out) {
    return guard([&] {
        require(g, "graph");
        require(out, "out");
        *out = is_connected(g->g) ? 1 : 0;
    });
}

pr_status pr_graph_is_strongly_connected(const pr_graph* g, int* out) {
    return guard([&] {
        require(g, "graph");
        require(out, "out");
        *out = is_strongly_connected(g->g.adjacency()) ? 1 : 0;
    });
}

pr_status pr_graph_write(const pr_graph* g, const char* path) {
    return guard([&] {
        require(g, "graph");
        write_to(path, [&](std::ostream& os) { write_edge_list(os, g->g); });
    });
}

pr_status pr_operator_create(const pr_graph* g, pr_walk walk, const double* node_weights, pr_correction correction,
                             const double* dist, pr_operator** out) {
    return guard([&] {
        require(g, "graph");
        require(out, "out");
        const Index n = g->g.num_nodes();
        SubStochastic base;
        switch (walk) {
            case PR_WALK_RANDOM: base = random_walk(g->g); break;
            case PR_WALK_REVERSE: base = reverse_walk(g->g); break;
            case PR_WALK_WEIGHTED:
                require(node_weights, "node_weights");
                base = weighted_walk(g->g, vec(node_weights, n));
                break;
            default: throw ValidationError("unknown walk construction");
        }
        Correction mode;
        switch (correction) {
            case PR_CORRECTION_NONE: mode = Correction::none; break;
            case PR_CORRECTION_STRONG: mode = Correction::strongly_preferential; break;
            case PR_CORRECTION_WEAK: mode = Correction::weakly_preferential; break;
            case PR_CORRECTION_SINK: mode = Correction::sink_preferential; break;
            default: throw ValidationError("unknown correction mode");
        }
        std::optional<std::vector<double>> d;
        if (mode == Correction::strongly_preferential || mode == Correction::weakly_preferential) {
            d = vec_or_uniform(dist, n);
        }
        *out = new pr_operator{make_operator(std::move(base), mode, std::move(d))};
    });
}

void pr_operator_free(pr_operator* op) { delete op; }
size_t pr_operator_size(const pr_operator* op) { return op ? op->op.size() : 0; }
int pr_operator_is_stochastic(const pr_operator* op) { return op && op->op.is_stochastic() ? 1 : 0; }

pr_status pr_operator_apply(const pr_operator* op, const double* x, double* y) {
    return guard([&] {
        require(op, "operator");
        require(x, "x");
        require(y, "y");
        const Index n = op->op.size();
        op->op.apply<double>(std::span<const double>(x, n), std::span<double>(y, n));
    });
}

pr_status pr_operator_correction(const pr_operator* op, double* c) {
    return guard([&] {
        require(op, "operator");
        require(c, "c");
        copy_out(op->op.base().correction, c);
    });
}

pr_status pr_operator_to_dense(const pr_operator* op, double* out) {
    return guard([&] {
        require(op, "operator");
        require(out, "out");
        const Index n = op->op.size();
        if (n > 2000) throw ValidationError("dense export is limited to n <= 2000");
        const DenseMatrix d = op->op.to_dense();
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) out[i * n + j] = d(i, j);
        }
    });
}

pr_status pr_solve(const pr_operator* op, double alpha, const double* v, double tol, int zero_start, double* x,
                   pr_info* info) {
    return guard([&] {
        require(op, "operator");
        require(x, "x");
        const Index n = op->op.size();
        const PageRankProblem problem(alpha, op->op, vec_or_uniform(v, n));
        const Solution s = solve(problem, options(tol, zero_start != 0));
        copy_out(s.x, x);
        fill_info(info, s);
    });
}

pr_status pr_solve_pseudo(const pr_operator* op, double alpha, const double* f, double tol, int normalize, double* y,
                          pr_info* info) {
    return guard([&] {
        require(op, "operator");
        require(f, "f");
        require(y, "y");
        const Index n = op->op.size();
        const PseudoProblem problem(alpha, op->op.base(), vec(f, n));
        Solution s = solve_pseudo(problem, options(tol));
        if (normalize != 0) s = normalize_to_pagerank(s);
        copy_out(s.x, y);
        fill_info(info, s);
    });
}

pr_status pr_solve_dirichlet(const pr_operator* op, double alpha, const size_t* nodes, const double* values,
                             size_t count, const double* v, double tol, double* x, pr_info* info) {
    return guard([&] {
        require(op, "operator");
        require(x, "x");
        if (count > 0) {
            require(nodes, "nodes");
            require(values, "values");
        }
        require(v, "v");
        const Index n = op->op.size();
        const auto red = dirichlet_reduce(op->op, std::span<const Index>(nodes, count),
                                          std::span<const double>(values, count), std::span<const double>(v, n), alpha);
        const Solution s = solve_pseudo(red.problem, options(tol));
        copy_out(red.expand(s.x), x);
        fill_info(info, s);
    });
}

pr_status pr_solve_dense(const pr_operator* op, double alpha, const double* v, double* x) {
    return guard([&] {
        require(op, "operator");
        require(x, "x");
        const Index n = op->op.size();
        validate_alpha(alpha);
        if (n > 2000) throw ValidationError("dense solve is limited to n <= 2000");
        const auto vv = vec_or_uniform(v, n);
        validate_distribution(vv, n, "teleportation vector v");
        copy_out(solve_dense_oracle(alpha, op->op.to_dense(), vv), x);
    });
}

pr_status pr_totalrank(const pr_operator* op, const double* v, double tol, double* x, size_t* terms) {
    return guard([&] {
        require(op, "operator");
        require(x, "x");
        const auto vv = vec_or_uniform(v, op->op.size());
        const DampedSum s = damped_sum(DampingSequence::totalrank(), op->op, vv, tol);
        copy_out(s.z, x);
        if (terms) *terms = s.terms;
    });
}

pr_status pr_heat_kernel(const pr_operator* op, double beta, const double* f, double tol, double* x, size_t* terms) {
    return guard([&] {
        require(op, "operator");
        require(x, "x");
        const auto ff = vec_or_uniform(f, op->op.size());
        const DampedSum s = damped_sum(DampingSequence::heat(beta), op->op, ff, tol);
        copy_out(s.z, x);
        if (terms) *terms = s.terms;
    });
}

pr_status pr_expected_uniform(const pr_operator* op, double a, double b, const double* v, double tol, double* x,
                              size_t* terms) {
    return guard([&] {
        require(op, "operator");
        require(x, "x");
        const auto vv = vec_or_uniform(v, op->op.size());
        const DampedSum s = damped_sum(DampingSequence::moments(uniform_moments(a, b)), op->op, vv, tol);
        copy_out(s.z, x);
        if (terms) *terms = s.terms;
    });
}

pr_status pr_solve_complex(const pr_operator* op, double alpha_re, double alpha_im, const double* v, double tol,
                           double* x, double* bound, pr_info* info) {
    return guard([&] {
        require(op, "operator");
        require(x, "x");
        const auto vv = vec_or_uniform(v, op->op.size());
        const ComplexSolution s = solve_complex({alpha_re, alpha_im}, op->op, vv, tol);
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            x[2 * i] = s.x[i].real();
            x[2 * i + 1] = s.x[i].imag();
        }
        if (bound) *bound = s.bound;
        if (info) *info = pr_info{s.iterations, s.residual_1norm, 1.0};
    });
}

pr_status pr_fiedler(const pr_graph* g, double* lambda_star, size_t* multiplicity, double* q) {
    return guard([&] {
        require(g, "graph");
        const FiedlerResult r = fiedler(g->g);
        if (lambda_star) *lambda_star = r.lambda_star;
        if (multiplicity) *multiplicity = r.multiplicity;
        if (q) copy_out(r.q, q);
    });
}

pr_status pr_mov(const pr_graph* g, const double* seed, double gamma, int project, double* r, double* rho) {
    return guard([&] {
        require(g, "graph");
        require(seed, "seed");
        require(r, "r");
        const Index n = g->g.num_nodes();
        MovSpec spec{vec(seed, n), gamma};
        if (project != 0) spec.seed = project_seed(spec.seed, degrees(g->g).out_degrees);
        const MovResult res = mov(g->g, spec);
        copy_out(res.r, r);
        if (rho) *rho = res.rho;
    });
}

pr_status pr_censored(const pr_graph* g, const double* v, double tol, double* x, double* alpha_implied,
                      pr_info* info) {
    return guard([&] {
        require(g, "graph");
        require(x, "x");
        const auto vv = vec_or_uniform(v, g->g.num_nodes());
        const auto cp = censored_node_problem(g->g, vv);
        const Solution s = normalize_to_pagerank(solve_pseudo(cp.problem, options(tol)));
        copy_out(s.x, x);
        if (alpha_implied) *alpha_implied = cp.alpha_implied;
        fill_info(info, s);
    });
}

pr_status pr_censored_chain(const pr_operator* op, double alpha, const double* v, double tol, double* x,
                            pr_info* info) {
    return guard([&] {
        require(op, "operator");
        require(x, "x");
        const auto vv = vec_or_uniform(v, op->op.size());
        const Solution s = censored_stationary(AugmentedChain::uniform_exit(op->op, alpha, vv), tol);
        copy_out(s.x, x);
        fill_info(info, s);
    });
}

pr_status pr_colley(const pr_graph* g, const double* f, double* ratings, double* alpha, double* route_gap) {
    return guard([&] {
        require(g, "graph");
        require(f, "f");
        require(ratings, "ratings");
        const ColleyResult r = colley(g->g, std::span<const double>(f, g->g.num_nodes()));
        copy_out(r.ratings, ratings);
        if (alpha) *alpha = r.alpha;
        if (route_gap) *route_gap = r.route_gap;
    });
}

pr_status pr_isorank(const pr_graph* a, const pr_graph* b, double alpha, const double* sim, double tol, double* x,
                     pr_info* info) {
    return guard([&] {
        require(a, "graph a");
        require(b, "graph b");
        require(x, "x");
        const Index n = a->g.num_nodes();
        const Index m = b->g.num_nodes();
        if (n == 0 || m == 0) throw ValidationError("IsoRank needs nonempty graphs");
        const DenseMatrix v = sim ? from_row_major(sim, n, m)
                                  : DenseMatrix(n, m, 1.0 / (static_cast<double>(n) * static_cast<double>(m)));
        const KronOperator kron(isorank_chain(a->g), isorank_chain(b->g));
        const IsoRankResult r = isorank_solve(kron, alpha, v, tol);
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < m; ++j) x[i * m + j] = r.x(i, j);
        }
        if (info) *info = pr_info{r.iterations, r.residual_1norm, 1.0};
    });
}

pr_status pr_greedy_match(const double* x, size_t n, size_t m, size_t* rows, size_t* cols, double* scores,
                          size_t* count) {
    return guard([&] {
        require(x, "x");
        require(rows, "rows");
        require(cols, "cols");
        const auto matches = greedy_match(from_row_major(x, n, m));
        for (std::size_t k = 0; k < matches.size(); ++k) {
            rows[k] = matches[k].i;
            cols[k] = matches[k].j;
            if (scores) scores[k] = matches[k].score;
        }
        if (count) *count = matches.size();
    });
}

void pr_chirikov_default(pr_chirikov_config* cfg) {
    if (cfg == nullptr) return;
    const ChirikovConfig d;
    *cfg = pr_chirikov_config{d.eta, d.k, d.periods, d.cells, d.samples, d.seed};
}

pr_status pr_chirikov_step(const pr_chirikov_config* cfg, double x, double y, double* x_out, double* y_out) {
    return guard([&] {
        require(cfg, "cfg");
        require(x_out, "x_out");
        require(y_out, "y_out");
        if (!std::isfinite(x) || !std::isfinite(y)) throw ValidationError("map inputs must be finite");
        const auto [xn, yn] = chirikov_step(to_config(*cfg), x, y);
        *x_out = xn;
        *y_out = yn;
    });
}

pr_status pr_ulam_build(const pr_chirikov_config* cfg, pr_graph** out) {
    return guard([&] {
        require(cfg, "cfg");
        require(out, "out");
        *out = new pr_graph{build_ulam(to_config(*cfg))};
    });
}

pr_status pr_ulam_scores(const pr_graph* g, pr_ulam_variant variant, double alpha, double tol, double* x,
                         pr_info* info) {
    return guard([&] {
        require(g, "graph");
        require(x, "x");
        UlamVariant uv;
        switch (variant) {
            case PR_ULAM_PAGERANK: uv = UlamVariant::pagerank; break;
            case PR_ULAM_WEIGHTED: uv = UlamVariant::weighted; break;
            case PR_ULAM_REVERSE: uv = UlamVariant::reverse; break;
            default: throw ValidationError("unknown Ulam variant");
        }
        const Solution s = ulam_scores(g->g, uv, alpha, tol);
        copy_out(s.x, x);
        fill_info(info, s);
    });
}

pr_status pr_write_heatmap(const double* scores, size_t n, const char* path, int* all_zero) {
    return guard([&] {
        require(scores, "scores");
        require(path, "path");
        const bool lit = render_heatmap(std::span<const double>(scores, n * n), n, path);
        if (all_zero) *all_zero = lit ? 0 : 1;
    });
}

pr_status pr_write_scores(const double* x, size_t n, const char* path) {
    return guard([&] {
        require(x, "x");
        write_to(path, [&](std::ostream& os) { write_scores_tsv(os, std::span<const double>(x, n)); });
    });
}

}  // extern "C"
