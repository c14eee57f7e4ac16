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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "pagerank/graph.hpp"
#include "pagerank/solver.hpp"

namespace pagerank {

struct ChirikovConfig {
    double eta = 0.99;
    double k = 0.22;
    std::size_t periods = 10;  // T
    std::size_t cells = 64;    // N per axis
    std::size_t samples = 200; // s per cell
    std::uint64_t seed = 7;
};

void validate_config(const ChirikovConfig& cfg);

/// The map with its phases θ_0..θ_{T-1} drawn once from the seed.
class ChirikovMap {
public:
    explicit ChirikovMap(const ChirikovConfig& cfg);

    /// T kicks with the frozen phases, then reduction into [0, 2π)².
    std::pair<double, double> operator()(double x, double y) const;

    const ChirikovConfig& config() const noexcept { return cfg_; }
    std::span<const double> phases() const noexcept { return phases_; }

private:
    ChirikovConfig cfg_;
    std::vector<double> phases_;
};

std::pair<double, double> chirikov_step(const ChirikovConfig& cfg, double x, double y);

/// x mod 2π in [0, 2π).
double wrap_angle(double x);

/// Half-open cell index floor(N·a / 2π) of an angle in [0, 2π).
std::size_t cell_of(double angle, std::size_t n);

/// N² nodes; cell (iy, ix) is node iy·N + ix. Each cell sends s uniform
/// samples through the map and links to every landing cell with the hit
/// count as weight.
Graph build_ulam(const ChirikovConfig& cfg);

enum class UlamVariant { pagerank, weighted, reverse };

/// Random walk, in-degree weighted walk or reverse walk on the Ulam graph,
/// with any dangling mass sent uniformly, solved at α with uniform v.
Solution ulam_scores(const Graph& g, UlamVariant variant, double alpha, double tol = kDefaultTolerance);

struct Heatmap {
    std::size_t side = 0;
    std::vector<std::uint8_t> pixels;  // row-major, row 0 holds y near 0
    bool all_zero = false;
};

/// round(255·(s/max)^{1/3}) per cell; all-zero scores give a black image
/// with all_zero set.
Heatmap heatmap_pixels(std::span<const double> scores, std::size_t n);

/// Binary PGM (P5, maxval 255).
void write_pgm(std::ostream& out, const Heatmap& image);

/// Returns false (and writes a black image) when every score is zero.
bool render_heatmap(std::span<const double> scores, std::size_t n, const std::filesystem::path& path);

}  // namespace pagerank
