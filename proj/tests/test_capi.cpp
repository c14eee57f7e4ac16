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

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "pagerank/pagerank.h"

namespace {

struct GraphDeleter {
    void operator()(pr_graph* g) const { pr_graph_free(g); }
};
struct OperatorDeleter {
    void operator()(pr_operator* op) const { pr_operator_free(op); }
};
using GraphPtr = std::unique_ptr<pr_graph, GraphDeleter>;
using OperatorPtr = std::unique_ptr<pr_operator, OperatorDeleter>;

const std::filesystem::path kData = PAGERANK_TEST_DATA;

GraphPtr load(const std::string& name, int undirected = 0) {
    pr_graph* g = nullptr;
    REQUIRE(pr_graph_load((kData / name).string().c_str(), 0, undirected, &g) == PR_OK);
    return GraphPtr(g);
}

OperatorPtr make_op(const pr_graph* g, pr_walk walk, pr_correction corr) {
    pr_operator* op = nullptr;
    REQUIRE(pr_operator_create(g, walk, nullptr, corr, nullptr, &op) == PR_OK);
    return OperatorPtr(op);
}

double sum(const std::vector<double>& x) { return std::accumulate(x.begin(), x.end(), 0.0); }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("pagerank_capi_" + name);
}

}  // namespace

TEST_CASE("status names and version") {
    CHECK(std::string(pr_status_name(PR_OK)) == "ok");
    CHECK(std::string(pr_status_name(PR_ERR_CONVERGENCE)) == "convergence failure");
    CHECK(std::string(pr_status_name(static_cast<pr_status>(99))) == "unknown status");
    CHECK(std::strlen(pr_version()) > 0);
}

TEST_CASE("graph handle queries") {
    const auto g = load("g6.tsv");
    CHECK(pr_graph_num_nodes(g.get()) == 6);
    CHECK(pr_graph_num_edges(g.get()) == 8);
    CHECK(pr_graph_is_directed(g.get()) == 1);
    std::vector<double> out(6), in(6);
    REQUIRE(pr_graph_out_degrees(g.get(), out.data()) == PR_OK);
    REQUIRE(pr_graph_in_degrees(g.get(), in.data()) == PR_OK);
    CHECK(out == std::vector<double>{0, 2, 1, 3, 1, 1});
    CHECK(in == std::vector<double>{1, 1, 2, 0, 3, 1});
    int connected = 0, strong = 1;
    REQUIRE(pr_graph_is_connected(g.get(), &connected) == PR_OK);
    REQUIRE(pr_graph_is_strongly_connected(g.get(), &strong) == PR_OK);
    CHECK(connected == 1);
    CHECK(strong == 0);
}

TEST_CASE("graph from edge arrays and round trip through a file") {
    const std::size_t src[] = {0, 1, 2};
    const std::size_t dst[] = {1, 2, 0};
    const double w[] = {1.0, 2.0, 3.0};
    pr_graph* raw = nullptr;
    REQUIRE(pr_graph_from_edges(3, src, dst, w, 3, 0, &raw) == PR_OK);
    const GraphPtr g(raw);
    const auto path = temp_file("cycle.tsv");
    REQUIRE(pr_graph_write(g.get(), path.string().c_str()) == PR_OK);
    pr_graph* back = nullptr;
    REQUIRE(pr_graph_load(path.string().c_str(), 1, 0, &back) == PR_OK);
    const GraphPtr h(back);
    std::vector<double> a(3), b(3);
    pr_graph_out_degrees(g.get(), a.data());
    pr_graph_out_degrees(h.get(), b.data());
    CHECK(a == b);
    std::filesystem::remove(path);
}

TEST_CASE("errors map to status codes and set the thread message") {
    pr_graph* g = nullptr;
    CHECK(pr_graph_load("/definitely/not/here.tsv", 0, 0, &g) == PR_ERR_IO);
    CHECK(g == nullptr);
    CHECK(std::string(pr_last_error()).find("not/here") != std::string::npos);

    const auto bad = temp_file("bad.tsv");
    std::ofstream(bad) << "0 x\n";
    CHECK(pr_graph_load(bad.string().c_str(), 1, 0, &g) == PR_ERR_PARSE);
    std::filesystem::remove(bad);

    const std::size_t src[] = {0};
    const std::size_t dst[] = {7};
    CHECK(pr_graph_from_edges(2, src, dst, nullptr, 1, 0, &g) == PR_ERR_VALIDATION);
    CHECK(pr_graph_load(nullptr, 0, 0, &g) == PR_ERR_VALIDATION);

    const auto g6 = load("g6.tsv");
    const auto op = make_op(g6.get(), PR_WALK_RANDOM, PR_CORRECTION_STRONG);
    std::vector<double> x(6);
    CHECK(pr_solve(op.get(), 1.5, nullptr, 1e-10, 0, x.data(), nullptr) == PR_ERR_VALIDATION);
    CHECK(std::string(pr_last_error()).find("alpha") != std::string::npos);
    CHECK(pr_solve(op.get(), 0.85, nullptr, 1e-300, 0, x.data(), nullptr) == PR_ERR_CONVERGENCE);

    double lambda = 0.0;
    std::size_t mult = 0;
    std::vector<double> q(6);
    CHECK(pr_fiedler(g6.get(), &lambda, &mult, q.data()) == PR_ERR_VALIDATION);
}

TEST_CASE("operator construction and solve") {
    const auto g = load("g6.tsv");
    const auto raw = make_op(g.get(), PR_WALK_RANDOM, PR_CORRECTION_NONE);
    CHECK(pr_operator_size(raw.get()) == 6);
    CHECK(pr_operator_is_stochastic(raw.get()) == 0);
    std::vector<double> c(6);
    REQUIRE(pr_operator_correction(raw.get(), c.data()) == PR_OK);
    CHECK(c == std::vector<double>{1, 0, 0, 0, 0, 0});

    const auto op = make_op(g.get(), PR_WALK_RANDOM, PR_CORRECTION_STRONG);
    CHECK(pr_operator_is_stochastic(op.get()) == 1);
    std::vector<double> dense(36);
    REQUIRE(pr_operator_to_dense(op.get(), dense.data()) == PR_OK);
    for (std::size_t j = 0; j < 6; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < 6; ++i) col += dense[i * 6 + j];
        CHECK(col == doctest::Approx(1.0).epsilon(1e-15));
    }

    std::vector<double> x(6), xd(6);
    pr_info info{};
    REQUIRE(pr_solve(op.get(), 0.85, nullptr, 1e-12, 0, x.data(), &info) == PR_OK);
    REQUIRE(pr_solve_dense(op.get(), 0.85, nullptr, xd.data()) == PR_OK);
    CHECK(info.iterations > 0);
    CHECK(info.residual >= 0.0);
    CHECK(sum(x) == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < 6; ++i) CHECK(x[i] == doctest::Approx(xd[i]).epsilon(1e-10));

    std::vector<double> y(6), f(6, 0.15 / 6.0);
    REQUIRE(pr_solve_pseudo(raw.get(), 0.85, f.data(), 1e-12, 1, y.data(), &info) == PR_OK);
    CHECK(info.scale > 0.0);
    for (std::size_t i = 0; i < 6; ++i) CHECK(y[i] == doctest::Approx(x[i]).epsilon(1e-9));
}

TEST_CASE("generalized diffusions through the C API") {
    const auto g = load("g6.tsv");
    const auto op = make_op(g.get(), PR_WALK_RANDOM, PR_CORRECTION_STRONG);
    std::vector<double> x(6);
    std::size_t terms = 0;
    REQUIRE(pr_totalrank(op.get(), nullptr, 1e-4, x.data(), &terms) == PR_OK);
    CHECK(terms > 0);
    CHECK(sum(x) == doctest::Approx(1.0).epsilon(1e-3));
    REQUIRE(pr_heat_kernel(op.get(), 2.0, nullptr, 1e-12, x.data(), &terms) == PR_OK);
    CHECK(sum(x) == doctest::Approx(std::exp(2.0)).epsilon(1e-10));
    REQUIRE(pr_expected_uniform(op.get(), 0.2, 0.6, nullptr, 1e-10, x.data(), &terms) == PR_OK);
    CHECK(sum(x) == doctest::Approx(1.0).epsilon(1e-8));

    std::vector<double> z(12);
    double bound = 0.0;
    REQUIRE(pr_solve_complex(op.get(), 0.5, 0.5, nullptr, 1e-12, z.data(), &bound, nullptr) == PR_OK);
    double norm = 0.0;
    for (std::size_t i = 0; i < 6; ++i) norm += std::hypot(z[2 * i], z[2 * i + 1]);
    CHECK(norm <= bound + 1e-10);
}

TEST_CASE("censored construction recovers the implied alpha") {
    const auto g = load("g6.tsv");
    std::vector<double> x(6);
    double implied = 0.0;
    REQUIRE(pr_censored(g.get(), nullptr, 1e-12, x.data(), &implied, nullptr) == PR_OK);
    CHECK(implied == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(sum(x) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("IsoRank and greedy matching through the C API") {
    const auto a = load("align_a.tsv", 1);
    const auto b = load("align_b.tsv", 1);
    std::vector<double> x(20);
    REQUIRE(pr_isorank(a.get(), b.get(), 0.85, nullptr, 1e-12, x.data(), nullptr) == PR_OK);
    CHECK(sum(x) == doctest::Approx(1.0).epsilon(1e-10));
    std::vector<std::size_t> rows(4), cols(4);
    std::vector<double> scores(4);
    std::size_t count = 0;
    REQUIRE(pr_greedy_match(x.data(), 4, 5, rows.data(), cols.data(), scores.data(), &count) == PR_OK);
    CHECK(count == 4);
    CHECK(rows[0] == 1);
    CHECK(cols[0] == 3);
}

TEST_CASE("Ulam network and heatmap through the C API") {
    pr_chirikov_config cfg;
    pr_chirikov_default(&cfg);
    CHECK(cfg.cells == 64);
    cfg.cells = 16;
    cfg.samples = 20;
    pr_graph* raw = nullptr;
    REQUIRE(pr_ulam_build(&cfg, &raw) == PR_OK);
    const GraphPtr g(raw);
    CHECK(pr_graph_num_nodes(g.get()) == 256);
    std::vector<double> x(256);
    REQUIRE(pr_ulam_scores(g.get(), PR_ULAM_REVERSE, 0.9, 1e-10, x.data(), nullptr) == PR_OK);
    CHECK(sum(x) == doctest::Approx(1.0).epsilon(1e-10));
    const auto path = temp_file("ulam.pgm");
    int all_zero = 1;
    REQUIRE(pr_write_heatmap(x.data(), 16, path.string().c_str(), &all_zero) == PR_OK);
    CHECK(all_zero == 0);
    CHECK(std::filesystem::file_size(path) == std::string("P5\n16 16\n255\n").size() + 256);
    std::filesystem::remove(path);

    cfg.cells = 1;
    CHECK(pr_ulam_build(&cfg, &raw) == PR_ERR_VALIDATION);
}

TEST_CASE("scores file output") {
    const auto path = temp_file("scores.tsv");
    const double x[] = {0.5, 0.25};
    REQUIRE(pr_write_scores(x, 2, path.string().c_str()) == PR_OK);
    std::ifstream in(path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "0\t0.5\n1\t0.25\n");
    std::filesystem::remove(path);
}
