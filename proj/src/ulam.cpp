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

#include "pagerank/ulam.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "pagerank/construct.hpp"
#include "pagerank/error.hpp"

namespace pagerank {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Streams: phases use {lo, hi, 0}; cell c uses {lo, hi, 1, c}.
std::mt19937_64 make_stream(std::uint64_t seed, std::initializer_list<std::uint32_t> tail) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    words.insert(words.end(), tail);
    std::seed_seq seq(words.begin(), words.end());
    return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

void validate_config(const ChirikovConfig& cfg) {
    if (cfg.cells < 2) throw ValidationError("Ulam grid needs N >= 2 cells per axis");
    if (cfg.samples < 1) throw ValidationError("Ulam grid needs s >= 1 samples per cell");
    if (cfg.cells > 4096) throw ValidationError("Ulam grid is limited to N <= 4096");
    if (!std::isfinite(cfg.eta) || !std::isfinite(cfg.k)) throw ValidationError("eta and k must be finite");
}

ChirikovMap::ChirikovMap(const ChirikovConfig& cfg) : cfg_(cfg) {
    validate_config(cfg);
    auto gen = make_stream(cfg.seed, {0u});
    phases_.resize(cfg.periods);
    for (auto& theta : phases_) theta = kTwoPi * uniform01(gen);
}

std::pair<double, double> ChirikovMap::operator()(double x, double y) const {
    for (const double theta : phases_) {
        y = cfg_.eta * y + cfg_.k * std::sin(x + theta);
        x = x + y;
    }
    return {wrap_angle(x), wrap_angle(y)};
}

std::pair<double, double> chirikov_step(const ChirikovConfig& cfg, double x, double y) {
    return ChirikovMap(cfg)(x, y);
}

double wrap_angle(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

std::size_t cell_of(double angle, std::size_t n) {
    const auto c = static_cast<std::size_t>(std::floor(angle * static_cast<double>(n) / kTwoPi));
    return std::min(c, n - 1);
}

Graph build_ulam(const ChirikovConfig& cfg) {
    const ChirikovMap map(cfg);
    const std::size_t n = cfg.cells;
    const double width = kTwoPi / static_cast<double>(n);
    std::vector<Triplet> edges;
    std::vector<Index> hits(cfg.samples);
    for (std::size_t iy = 0; iy < n; ++iy) {
        for (std::size_t ix = 0; ix < n; ++ix) {
            const std::size_t node = iy * n + ix;
            auto gen = make_stream(cfg.seed, {1u, static_cast<std::uint32_t>(node)});
            for (auto& h : hits) {
                const double x = width * (static_cast<double>(ix) + uniform01(gen));
                const double y = width * (static_cast<double>(iy) + uniform01(gen));
                const auto [xn, yn] = map(x, y);
                h = cell_of(yn, n) * n + cell_of(xn, n);
            }
            std::sort(hits.begin(), hits.end());
            for (std::size_t a = 0; a < hits.size();) {
                std::size_t b = a;
                while (b < hits.size() && hits[b] == hits[a]) ++b;
                edges.push_back({node, hits[a], static_cast<double>(b - a)});
                a = b;
            }
        }
    }
    return Graph(SparseMatrix::from_triplets(n * n, n * n, std::move(edges)), true);
}

Solution ulam_scores(const Graph& g, UlamVariant variant, double alpha, double tol) {
    SubStochastic base;
    switch (variant) {
        case UlamVariant::pagerank:
            base = random_walk(g);
            break;
        case UlamVariant::weighted: {
            // Weight each target by how many cells feed into it.
            std::vector<double> w(g.num_nodes(), 0.0);
            const auto& a = g.adjacency();
            for (Index j = 0; j < a.cols(); ++j) w[j] = static_cast<double>(a.col_ptr()[j + 1] - a.col_ptr()[j]);
            base = weighted_walk(g, w);
            break;
        }
        case UlamVariant::reverse:
            base = reverse_walk(g);
            break;
    }
    const Index n = g.num_nodes();
    const PageRankProblem problem(
        alpha, StochasticOperator(std::move(base), Correction::strongly_preferential, uniform_distribution(n)),
        uniform_distribution(n));
    SolveOptions opts;
    opts.tol = tol;
    return solve(problem, opts);
}

Heatmap heatmap_pixels(std::span<const double> scores, std::size_t n) {
    if (scores.size() != n * n) throw ValidationError("heatmap needs N^2 scores");
    double top = 0.0;
    for (const double s : scores) {
        if (!std::isfinite(s) || s < 0.0) throw ValidationError("heatmap scores must be nonnegative");
        top = std::max(top, s);
    }
    Heatmap out{n, std::vector<std::uint8_t>(n * n, 0), top == 0.0};
    if (out.all_zero) return out;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        out.pixels[i] = static_cast<std::uint8_t>(std::lround(255.0 * std::cbrt(scores[i] / top)));
    }
    return out;
}

void write_pgm(std::ostream& out, const Heatmap& image) {
    out << "P5\n" << image.side << ' ' << image.side << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()), static_cast<std::streamsize>(image.pixels.size()));
}

bool render_heatmap(std::span<const double> scores, std::size_t n, const std::filesystem::path& path) {
    const Heatmap image = heatmap_pixels(scores, n);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    write_pgm(out, image);
    if (!out) throw IoError("failed writing " + path.string());
    return !image.all_zero;
}

}  // namespace pagerank
