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

// Batch front end over the C API. Exit codes: 0 success, 1 invalid input,
// 2 convergence failure, 64 usage error, 70 internal error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pagerank/pagerank.h"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitConvergence = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

// Carries a status out of a subcommand body to main's exit-code mapping.
struct Failure {
    pr_status status;
    std::string message;
};

void check(pr_status s) {
    if (s != PR_OK) throw Failure{s, pr_last_error()};
}

[[noreturn]] void invalid(const std::string& message) { throw Failure{PR_ERR_VALIDATION, message}; }

int exit_code(pr_status s) {
    switch (s) {
        case PR_OK: return 0;
        case PR_ERR_CONVERGENCE: return kExitConvergence;
        case PR_ERR_INTERNAL: return kExitInternal;
        default: return kExitInvalid;
    }
}

struct GraphDeleter {
    void operator()(pr_graph* g) const { pr_graph_free(g); }
};
struct OperatorDeleter {
    void operator()(pr_operator* op) const { pr_operator_free(op); }
};
using GraphPtr = std::unique_ptr<pr_graph, GraphDeleter>;
using OperatorPtr = std::unique_ptr<pr_operator, OperatorDeleter>;

GraphPtr load(const std::string& path, const std::string& format, bool undirected) {
    int code = 0;
    if (format == "edge-list") code = 1;
    else if (format == "mtx") code = 2;
    pr_graph* g = nullptr;
    check(pr_graph_load(path.c_str(), code, undirected ? 1 : 0, &g));
    return GraphPtr(g);
}

void report(const pr_info& info) {
    std::fprintf(stderr, "iterations: %zu\nresidual: %.6e\n", info.iterations, info.residual);
}

const char* out_path(const std::string& out) { return out.empty() || out == "-" ? nullptr : out.c_str(); }

// "node<TAB>value" lines (any whitespace), '#' comments; absent nodes are 0.
std::vector<double> read_node_values(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw Failure{PR_ERR_IO, "cannot open " + path};
    std::vector<double> out(n, 0.0);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        long long node = 0;
        double value = 0.0;
        if (!(ss >> node)) continue;
        if (!(ss >> value)) throw Failure{PR_ERR_PARSE, path + ": line " + std::to_string(lineno) + ": expected node and value"};
        if (node < 0 || static_cast<std::size_t>(node) >= n) {
            invalid(path + ": line " + std::to_string(lineno) + ": node " + std::to_string(node) + " out of range");
        }
        out[static_cast<std::size_t>(node)] += value;
    }
    return out;
}

std::vector<double> normalized(std::vector<double> x, const char* what) {
    double mass = 0.0;
    for (const double v : x) {
        if (!std::isfinite(v) || v < 0.0) invalid(std::string(what) + " must be nonnegative and finite");
        mass += v;
    }
    if (!(mass > 0.0)) invalid(std::string(what) + " has zero mass");
    for (auto& v : x) v /= mass;
    return x;
}

struct Teleport {
    std::string kind = "uniform";
    std::string file;
    std::vector<long long> nodes;

    void add(CLI::App* app) {
        app->add_option("--teleport", kind, "Teleportation: uniform, file or nodes")
            ->check(CLI::IsMember({"uniform", "file", "nodes"}));
        app->add_option("--teleport-file", file, "TSV node<TAB>weight, normalized to unit mass");
        app->add_option("--seed-nodes", nodes, "Uniform teleportation over these nodes")->delimiter(',');
    }

    std::vector<double> build(std::size_t n) const {
        std::string k = kind;
        if (k == "uniform" && !file.empty()) k = "file";
        if (k == "uniform" && !nodes.empty()) k = "nodes";
        if (!file.empty() && !nodes.empty()) invalid("give exactly one teleportation spec");
        if (k == "uniform") return std::vector<double>(n, 1.0 / static_cast<double>(n));
        if (k == "file") {
            if (file.empty()) invalid("--teleport file needs --teleport-file");
            return normalized(read_node_values(file, n), "teleportation vector");
        }
        if (nodes.empty()) invalid("--teleport nodes needs --seed-nodes");
        std::vector<double> v(n, 0.0);
        for (const long long i : nodes) {
            if (i < 0 || static_cast<std::size_t>(i) >= n) invalid("seed node " + std::to_string(i) + " out of range");
            v[static_cast<std::size_t>(i)] = 1.0;
        }
        return normalized(std::move(v), "teleportation vector");
    }
};

struct GraphArgs {
    std::string path;
    std::string format = "auto";
    bool undirected = false;

    void add(CLI::App* app, bool required = true) {
        auto* opt = app->add_option("--graph", path, "Graph file (edge list or .mtx)");
        if (required) opt->required();
        app->add_option("--format", format, "auto, edge-list or mtx")->check(CLI::IsMember({"auto", "edge-list", "mtx"}));
        app->add_flag("--undirected", undirected, "Symmetrize the edge list");
    }

    GraphPtr load_graph() const { return load(path, format, undirected); }
};

struct WalkArgs {
    std::string walk = "random";
    std::string weights = "in";
    std::string weights_file;

    void add(CLI::App* app) {
        app->add_option("--walk", walk, "Base walk: random, reverse or weighted")
            ->check(CLI::IsMember({"random", "reverse", "weighted"}));
        app->add_option("--node-weights", weights, "Weighted walk node weights: in, out or total degree")
            ->check(CLI::IsMember({"in", "out", "total"}));
        app->add_option("--node-weights-file", weights_file, "Weighted walk node weights from TSV");
    }

    pr_walk kind() const {
        if (walk == "reverse") return PR_WALK_REVERSE;
        if (walk == "weighted") return PR_WALK_WEIGHTED;
        return PR_WALK_RANDOM;
    }

    std::vector<double> node_weights(const pr_graph* g) const {
        const std::size_t n = pr_graph_num_nodes(g);
        if (!weights_file.empty()) return read_node_values(weights_file, n);
        std::vector<double> in(n), out(n);
        check(pr_graph_in_degrees(g, in.data()));
        check(pr_graph_out_degrees(g, out.data()));
        if (weights == "out") return out;
        if (weights == "total") {
            for (std::size_t i = 0; i < n; ++i) in[i] += out[i];
        }
        return in;
    }
};

OperatorPtr make_op(const pr_graph* g, pr_walk walk, const std::vector<double>& node_weights, pr_correction corr,
                    const std::vector<double>* dist) {
    pr_operator* op = nullptr;
    check(pr_operator_create(g, walk, node_weights.empty() ? nullptr : node_weights.data(), corr,
                             dist ? dist->data() : nullptr, &op));
    return OperatorPtr(op);
}

pr_correction parse_correction(const std::string& c) {
    if (c == "none") return PR_CORRECTION_NONE;
    if (c == "weak") return PR_CORRECTION_WEAK;
    if (c == "sink") return PR_CORRECTION_SINK;
    return PR_CORRECTION_STRONG;
}

void write_scores(const std::vector<double>& x, const std::string& out) {
    check(pr_write_scores(x.data(), x.size(), out_path(out)));
}

// Builds the operator named by a construction string for the solve command.
OperatorPtr construction_operator(const pr_graph* g, const std::string& construction, const WalkArgs& walk,
                                  const std::vector<double>& v, const std::vector<double>* u) {
    const std::size_t n = pr_graph_num_nodes(g);
    std::vector<double> none;
    if (construction == "random-walk") return make_op(g, PR_WALK_RANDOM, none, PR_CORRECTION_NONE, nullptr);
    if (construction == "reverse") return make_op(g, PR_WALK_REVERSE, none, PR_CORRECTION_STRONG, &v);
    if (construction == "weighted") return make_op(g, PR_WALK_WEIGHTED, walk.node_weights(g), PR_CORRECTION_STRONG, &v);
    const auto w = walk.kind() == PR_WALK_WEIGHTED ? walk.node_weights(g) : none;
    if (construction == "weak") {
        std::vector<double> uniform(n, 1.0 / static_cast<double>(n));
        return make_op(g, walk.kind(), w, PR_CORRECTION_WEAK, u ? u : &uniform);
    }
    if (construction == "sink") return make_op(g, walk.kind(), w, PR_CORRECTION_SINK, nullptr);
    return make_op(g, walk.kind(), w, PR_CORRECTION_STRONG, &v);  // strong, dirichlet
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse-graph PageRank toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", pr_version());

    double alpha = 0.85;
    double tol = 1e-10;
    std::string out;
    GraphArgs graph;
    Teleport teleport;
    WalkArgs walk;

    auto common = [&](CLI::App* sub, bool with_alpha = true) {
        if (with_alpha) sub->add_option("--alpha", alpha, "Teleportation parameter in (0,1)")->capture_default_str();
        sub->add_option("--tol", tol, "1-norm error tolerance")->capture_default_str();
        sub->add_option("--out,-o", out, "Output path (default stdout)");
    };

    // solve
    std::string construction = "strong";
    std::string start = "teleport";
    std::string dangling_file;
    std::string boundary_file;
    auto* solve_cmd = app.add_subcommand("solve", "PageRank by Richardson iteration");
    graph.add(solve_cmd);
    walk.add(solve_cmd);
    teleport.add(solve_cmd);
    common(solve_cmd);
    solve_cmd
        ->add_option("--construction", construction,
                     "random-walk, strong, weak, sink, reverse, weighted or dirichlet")
        ->check(CLI::IsMember({"random-walk", "strong", "weak", "sink", "reverse", "weighted", "dirichlet"}))
        ->capture_default_str();
    solve_cmd->add_option("--start", start, "teleport or zero")->check(CLI::IsMember({"teleport", "zero"}));
    solve_cmd->add_option("--dangling-file", dangling_file, "Weak-preferential dangling distribution u (TSV)");
    solve_cmd->add_option("--boundary", boundary_file, "Dirichlet boundary values (TSV node<TAB>value)");

    // pseudo
    std::string rhs_file;
    bool normalize = false;
    auto* pseudo_cmd = app.add_subcommand("pseudo", "Pseudo-PageRank on the uncorrected walk");
    graph.add(pseudo_cmd);
    walk.add(pseudo_cmd);
    teleport.add(pseudo_cmd);
    common(pseudo_cmd);
    pseudo_cmd->add_option("--rhs", rhs_file, "Right-hand side f (TSV); default (1-alpha) v");
    pseudo_cmd->add_flag("--normalize", normalize, "Renormalize the solution to unit mass");

    // generalized diffusions
    std::string correction = "strong";
    auto diffusion = [&](CLI::App* sub, bool with_alpha) {
        graph.add(sub);
        walk.add(sub);
        teleport.add(sub);
        common(sub, with_alpha);
        sub->add_option("--correction", correction, "none, strong, weak or sink")
            ->check(CLI::IsMember({"none", "strong", "weak", "sink"}));
    };
    auto* totalrank_cmd = app.add_subcommand("totalrank", "PageRank integrated over alpha in [0,1]");
    diffusion(totalrank_cmd, false);
    totalrank_cmd->get_option("--tol")->default_str("1e-06");
    double beta = 1.0;
    auto* heat_cmd = app.add_subcommand("heatkernel", "exp(beta P) f by truncated series");
    diffusion(heat_cmd, false);
    heat_cmd->add_option("--beta", beta, "Diffusion time in [0,30]")->capture_default_str();
    std::string dist_spec = "uniform:0,1";
    auto* expected_cmd = app.add_subcommand("expected", "Expected PageRank for a random alpha");
    diffusion(expected_cmd, false);
    expected_cmd->add_option("--dist", dist_spec, "Distribution of alpha: uniform:a,b")->capture_default_str();
    double alpha_re = 0.85, alpha_im = 0.0;
    auto* complex_cmd = app.add_subcommand("complex", "PageRank at a complex alpha");
    diffusion(complex_cmd, false);
    complex_cmd->add_option("--alpha-re", alpha_re, "Real part of alpha")->capture_default_str();
    complex_cmd->add_option("--alpha-im", alpha_im, "Imaginary part of alpha")->capture_default_str();

    // spectral
    auto* fiedler_cmd = app.add_subcommand("fiedler", "Fiedler vector of an undirected graph");
    graph.add(fiedler_cmd);
    common(fiedler_cmd, false);
    double gamma = 0.0;
    std::string seed_file;
    bool project = false;
    auto* mov_cmd = app.add_subcommand("mov", "Locally-biased MOV vector");
    graph.add(mov_cmd);
    common(mov_cmd, false);
    mov_cmd->add_option("--gamma", gamma, "Shift below the Fiedler value")->capture_default_str();
    mov_cmd->add_option("--seed-file", seed_file, "Seed vector s (TSV)")->required();
    mov_cmd->add_flag("--project", project, "Project s so that s^T D e = 0");

    // censored
    std::string censored_mode = "node";
    auto* censored_cmd = app.add_subcommand("censored", "Censored teleport-state constructions");
    graph.add(censored_cmd);
    walk.add(censored_cmd);
    teleport.add(censored_cmd);
    common(censored_cmd);
    censored_cmd->add_option("--mode", censored_mode, "node (degree exit) or chain (uniform exit at alpha)")
        ->check(CLI::IsMember({"node", "chain"}));
    std::string scores_file;
    auto* colley_cmd = app.add_subcommand("colley", "Colley ratings from a game graph");
    graph.add(colley_cmd);
    common(colley_cmd, false);
    colley_cmd->add_option("--scores", scores_file, "TSV team<TAB>net point differential")->required();

    // isorank
    std::string graph_a, graph_b, sim_file;
    auto* isorank_cmd = app.add_subcommand("isorank", "IsoRank network alignment");
    isorank_cmd->add_option("--graph-a", graph_a, "First graph")->required();
    isorank_cmd->add_option("--graph-b", graph_b, "Second graph")->required();
    isorank_cmd->add_option("--sim", sim_file, "Prior similarity (TSV i<TAB>j<TAB>value)");
    isorank_cmd->add_option("--format", graph.format, "auto, edge-list or mtx")
        ->check(CLI::IsMember({"auto", "edge-list", "mtx"}));
    isorank_cmd->add_flag("--undirected", graph.undirected, "Symmetrize both edge lists");
    common(isorank_cmd);

    // ulam
    pr_chirikov_config cfg;
    pr_chirikov_default(&cfg);
    double ulam_alpha = 0.9;
    std::string variant = "pagerank";
    std::string scores_out, graph_out;
    auto* ulam_cmd = app.add_subcommand("ulam", "Ulam network of the Chirikov typical map");
    ulam_cmd->add_option("--n", cfg.cells, "Cells per axis")->capture_default_str();
    ulam_cmd->add_option("--samples", cfg.samples, "Samples per cell")->capture_default_str();
    ulam_cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    ulam_cmd->add_option("--eta", cfg.eta, "Dissipation")->capture_default_str();
    ulam_cmd->add_option("--k", cfg.k, "Kick strength")->capture_default_str();
    ulam_cmd->add_option("--periods", cfg.periods, "Random phases per map application")->capture_default_str();
    ulam_cmd->add_option("--alpha", ulam_alpha, "Teleportation parameter")->capture_default_str();
    ulam_cmd->add_option("--tol", tol, "1-norm error tolerance")->capture_default_str();
    ulam_cmd->add_option("--variant", variant, "pagerank, weighted or reverse")
        ->check(CLI::IsMember({"pagerank", "weighted", "reverse"}));
    ulam_cmd->add_option("--out,-o", out, "PGM output path")->required();
    ulam_cmd->add_option("--scores-out", scores_out, "Also write the scores as TSV");
    ulam_cmd->add_option("--graph-out", graph_out, "Also write the Ulam graph as an edge list");

    // info
    auto* info_cmd = app.add_subcommand("info", "Graph summary");
    graph.add(info_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        pr_info info{};
        if (solve_cmd->parsed()) {
            const auto g = graph.load_graph();
            const std::size_t n = pr_graph_num_nodes(g.get());
            const auto v = teleport.build(n);
            std::optional<std::vector<double>> u;
            if (!dangling_file.empty()) u = normalized(read_node_values(dangling_file, n), "dangling distribution");
            const auto op = construction_operator(g.get(), construction, walk, v, u ? &*u : nullptr);
            std::vector<double> x(n);
            if (construction == "dirichlet") {
                if (boundary_file.empty()) invalid("dirichlet construction needs --boundary");
                std::vector<std::size_t> nodes;
                std::vector<double> values;
                std::ifstream in(boundary_file);
                if (!in) throw Failure{PR_ERR_IO, "cannot open " + boundary_file};
                std::string line;
                while (std::getline(in, line)) {
                    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
                    std::istringstream ss(line);
                    long long i;
                    double b;
                    if (!(ss >> i)) continue;
                    if (!(ss >> b)) throw Failure{PR_ERR_PARSE, boundary_file + ": expected node and value"};
                    if (i < 0) invalid("boundary node out of range");
                    nodes.push_back(static_cast<std::size_t>(i));
                    values.push_back(b);
                }
                check(pr_solve_dirichlet(op.get(), alpha, nodes.data(), values.data(), nodes.size(), v.data(), tol,
                                         x.data(), &info));
            } else {
                check(pr_solve(op.get(), alpha, v.data(), tol, start == "zero" ? 1 : 0, x.data(), &info));
            }
            report(info);
            write_scores(x, out);
        } else if (pseudo_cmd->parsed()) {
            const auto g = graph.load_graph();
            const std::size_t n = pr_graph_num_nodes(g.get());
            std::vector<double> f;
            if (!rhs_file.empty()) {
                f = read_node_values(rhs_file, n);
            } else {
                f = teleport.build(n);
                for (auto& fi : f) fi *= 1.0 - alpha;
            }
            const auto w = walk.kind() == PR_WALK_WEIGHTED ? walk.node_weights(g.get()) : std::vector<double>{};
            const auto op = make_op(g.get(), walk.kind(), w, PR_CORRECTION_NONE, nullptr);
            std::vector<double> y(n);
            check(pr_solve_pseudo(op.get(), alpha, f.data(), tol, normalize ? 1 : 0, y.data(), &info));
            report(info);
            write_scores(y, out);
        } else if (totalrank_cmd->parsed() || heat_cmd->parsed() || expected_cmd->parsed() || complex_cmd->parsed()) {
            const auto g = graph.load_graph();
            const std::size_t n = pr_graph_num_nodes(g.get());
            const auto v = teleport.build(n);
            const auto w = walk.kind() == PR_WALK_WEIGHTED ? walk.node_weights(g.get()) : std::vector<double>{};
            const auto op = make_op(g.get(), walk.kind(), w, parse_correction(correction), &v);
            std::size_t terms = 0;
            if (complex_cmd->parsed()) {
                std::vector<double> x(2 * n);
                double bound = 0.0;
                check(pr_solve_complex(op.get(), alpha_re, alpha_im, v.data(), tol, x.data(), &bound, &info));
                report(info);
                std::fprintf(stderr, "bound: %.17g\n", bound);
                std::FILE* fp = out_path(out) ? std::fopen(out.c_str(), "w") : stdout;
                if (!fp) throw Failure{PR_ERR_IO, "cannot open " + out};
                for (std::size_t i = 0; i < n; ++i) std::fprintf(fp, "%zu\t%.17g\t%.17g\n", i, x[2 * i], x[2 * i + 1]);
                if (fp != stdout) std::fclose(fp);
                return 0;
            }
            std::vector<double> x(n);
            if (totalrank_cmd->parsed()) {
                // The certified tail decays like 1/K, so a tighter default is impractical.
                const double total_tol = totalrank_cmd->count("--tol") > 0 ? tol : 1e-6;
                check(pr_totalrank(op.get(), v.data(), total_tol, x.data(), &terms));
            } else if (heat_cmd->parsed()) {
                check(pr_heat_kernel(op.get(), beta, v.data(), tol, x.data(), &terms));
            } else {
                double a = 0.0, b = 0.0;
                char comma = 0;
                std::istringstream ss(dist_spec.rfind("uniform:", 0) == 0 ? dist_spec.substr(8) : std::string());
                if (!(ss >> a >> comma >> b) || comma != ',') invalid("--dist must look like uniform:a,b");
                check(pr_expected_uniform(op.get(), a, b, v.data(), tol, x.data(), &terms));
            }
            std::fprintf(stderr, "terms: %zu\n", terms);
            write_scores(x, out);
        } else if (fiedler_cmd->parsed()) {
            graph.undirected = true;
            const auto g = graph.load_graph();
            std::vector<double> q(pr_graph_num_nodes(g.get()));
            double lambda = 0.0;
            std::size_t mult = 0;
            check(pr_fiedler(g.get(), &lambda, &mult, q.data()));
            std::fprintf(stderr, "lambda_star: %.17g\nmultiplicity: %zu\n", lambda, mult);
            write_scores(q, out);
        } else if (mov_cmd->parsed()) {
            graph.undirected = true;
            const auto g = graph.load_graph();
            const std::size_t n = pr_graph_num_nodes(g.get());
            const auto s = read_node_values(seed_file, n);
            std::vector<double> r(n);
            double rho = 0.0;
            check(pr_mov(g.get(), s.data(), gamma, project ? 1 : 0, r.data(), &rho));
            std::fprintf(stderr, "rho: %.17g\n", rho);
            write_scores(r, out);
        } else if (censored_cmd->parsed()) {
            const auto g = graph.load_graph();
            const std::size_t n = pr_graph_num_nodes(g.get());
            const auto v = teleport.build(n);
            std::vector<double> x(n);
            if (censored_mode == "node") {
                double implied = 0.0;
                check(pr_censored(g.get(), v.data(), tol, x.data(), &implied, &info));
                report(info);
                std::fprintf(stderr, "alpha_implied: %.17g\n", implied);
            } else {
                const auto w = walk.kind() == PR_WALK_WEIGHTED ? walk.node_weights(g.get()) : std::vector<double>{};
                const auto op = make_op(g.get(), walk.kind(), w, PR_CORRECTION_STRONG, &v);
                check(pr_censored_chain(op.get(), alpha, v.data(), tol, x.data(), &info));
                report(info);
            }
            write_scores(x, out);
        } else if (colley_cmd->parsed()) {
            graph.undirected = true;
            const auto g = graph.load_graph();
            const std::size_t n = pr_graph_num_nodes(g.get());
            const auto f = read_node_values(scores_file, n);
            std::vector<double> r(n);
            double a = 0.0, gap = 0.0;
            check(pr_colley(g.get(), f.data(), r.data(), &a, &gap));
            std::fprintf(stderr, "alpha: %.17g\nroute_gap: %.3e\n", a, gap);
            write_scores(r, out);
        } else if (isorank_cmd->parsed()) {
            const auto ga = load(graph_a, graph.format, graph.undirected);
            const auto gb = load(graph_b, graph.format, graph.undirected);
            const std::size_t n = pr_graph_num_nodes(ga.get());
            const std::size_t m = pr_graph_num_nodes(gb.get());
            std::vector<double> sim;
            if (!sim_file.empty()) {
                sim.assign(n * m, 0.0);
                std::ifstream in(sim_file);
                if (!in) throw Failure{PR_ERR_IO, "cannot open " + sim_file};
                std::string line;
                while (std::getline(in, line)) {
                    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
                    std::istringstream ss(line);
                    long long i, j;
                    double value;
                    if (!(ss >> i)) continue;
                    if (!(ss >> j >> value)) throw Failure{PR_ERR_PARSE, sim_file + ": expected i, j and value"};
                    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= m) {
                        invalid(sim_file + ": index out of range");
                    }
                    sim[static_cast<std::size_t>(i) * m + static_cast<std::size_t>(j)] += value;
                }
                sim = normalized(std::move(sim), "similarity matrix");
            }
            std::vector<double> x(n * m);
            check(pr_isorank(ga.get(), gb.get(), alpha, sim.empty() ? nullptr : sim.data(), tol, x.data(), &info));
            report(info);
            const std::size_t k = std::min(n, m);
            std::vector<std::size_t> rows(k), cols(k);
            std::vector<double> scores(k);
            std::size_t count = 0;
            check(pr_greedy_match(x.data(), n, m, rows.data(), cols.data(), scores.data(), &count));
            std::FILE* fp = out_path(out) ? std::fopen(out.c_str(), "w") : stdout;
            if (!fp) throw Failure{PR_ERR_IO, "cannot open " + out};
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < m; ++j) std::fprintf(fp, "%s%.17g", j ? "\t" : "", x[i * m + j]);
                std::fputc('\n', fp);
            }
            std::fprintf(fp, "# matching: i\tj\tscore\n");
            for (std::size_t t = 0; t < count; ++t) std::fprintf(fp, "# %zu\t%zu\t%.17g\n", rows[t], cols[t], scores[t]);
            if (fp != stdout) std::fclose(fp);
        } else if (ulam_cmd->parsed()) {
            pr_graph* raw = nullptr;
            check(pr_ulam_build(&cfg, &raw));
            const GraphPtr g(raw);
            std::fprintf(stderr, "nodes: %zu\nedges: %zu\n", pr_graph_num_nodes(g.get()), pr_graph_num_edges(g.get()));
            if (!graph_out.empty()) check(pr_graph_write(g.get(), graph_out.c_str()));
            const auto kind = variant == "weighted" ? PR_ULAM_WEIGHTED
                              : variant == "reverse" ? PR_ULAM_REVERSE
                                                     : PR_ULAM_PAGERANK;
            std::vector<double> x(pr_graph_num_nodes(g.get()));
            check(pr_ulam_scores(g.get(), kind, ulam_alpha, tol, x.data(), &info));
            report(info);
            if (!scores_out.empty()) write_scores(x, scores_out);
            int all_zero = 0;
            check(pr_write_heatmap(x.data(), cfg.cells, out.c_str(), &all_zero));
            if (all_zero) std::fprintf(stderr, "warning: all scores are zero; wrote a black image\n");
        } else if (info_cmd->parsed()) {
            const auto g = graph.load_graph();
            const std::size_t n = pr_graph_num_nodes(g.get());
            std::vector<double> d(n);
            check(pr_graph_out_degrees(g.get(), d.data()));
            std::size_t dangling = 0;
            for (const double di : d) dangling += di == 0.0 ? 1 : 0;
            int connected = 0, strong = 0;
            check(pr_graph_is_connected(g.get(), &connected));
            check(pr_graph_is_strongly_connected(g.get(), &strong));
            std::printf("nodes\t%zu\nedges\t%zu\ndirected\t%d\ndangling\t%zu\nconnected\t%d\nstrongly_connected\t%d\n",
                        n, pr_graph_num_edges(g.get()), pr_graph_is_directed(g.get()), dangling, connected, strong);
        }
    } catch (const Failure& f) {
        std::fprintf(stderr, "error: %s: %s\n", pr_status_name(f.status), f.message.c_str());
        return exit_code(f.status);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInternal;
    }
    return 0;
}
