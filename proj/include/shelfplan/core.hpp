#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shelfplan/rng.hpp"

namespace shelfplan {

/// Grid coordinate. x is the column, y the row, origin at the top-left.
struct Point {
    int x = 0;
    int y = 0;
    bool operator==(const Point&) const = default;
};

/// One shelf block: orientation flag, anchor cell and extent in cells.
/// Vertical blocks grow downward from the anchor (increasing y), horizontal
/// blocks grow rightward (increasing x).
struct BlockGene {
    bool is_vertical = false;
    int x = 0;
    int y = 0;
    int length = 1;
    bool operator==(const BlockGene&) const = default;
};

/// Scalar fitness terms for one layout; total is f + a + r, no hidden weights.
struct FitnessBreakdown {
    int b = 0;       ///< shelf cell count
    bool s = false;  ///< navigability flag
    int n = 0;       ///< adjacent shelf-cell pairs
    double f = 0.0;  ///< coverage term, b / 5
    double a = 0.0;  ///< navigability reward or penalty
    double r = 0.0;  ///< adjacency term
    double total = 0.0;
};

/// Candidate layout: fixed-length gene list plus a lazily filled fitness cache.
struct Individual {
    std::vector<BlockGene> genes;
    std::optional<FitnessBreakdown> fitness;
};

/// Adjacency-term variant. `paper` keeps the piecewise reward as-is;
/// `inverted` negates its n >= 5 branch so heavy clustering is penalized
/// instead of rewarded. Everything defaults to `paper`.
enum class RMode { paper, inverted };

/// Parameters of one evolution run. The defaults describe the reference
/// setup: 10x10 grid, 10 blocks, population 100, 100 generations.
struct RunConfig {
    int grid_width = 10;
    int grid_height = 10;
    int num_blocks = 10;
    int max_block_length = 10;  ///< gene lengths are sampled from [1, max_block_length]
    int population_size = 100;
    int generations = 100;
    double crossover_prob = 0.9;
    double mutation_prob = 0.05;  ///< per-gene probability
    int elite_count = 1;
    Point entrance{0, 0};
    Point exit{9, 9};
    RMode r_mode = RMode::paper;
    std::uint64_t rng_seed = 0;
};

/// Reason the config is unusable, or nullopt when it is fine.
std::optional<std::string> validate_config(const RunConfig& config);

/// W x H occupancy matrix: each cell is either corridor (0) or shelf (1).
class GridMap {
public:
    GridMap() = default;
    GridMap(int width, int height)
        : width_(width),
          height_(height),
          cells_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 0) {}

    int width() const { return width_; }
    int height() const { return height_; }

    bool in_bounds(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }
    bool in_bounds(Point p) const { return in_bounds(p.x, p.y); }

    bool shelf_at(int x, int y) const { return cells_[index(x, y)] != 0; }
    bool shelf_at(Point p) const { return shelf_at(p.x, p.y); }
    void set_shelf(int x, int y, bool shelf = true) { cells_[index(x, y)] = shelf ? 1 : 0; }

    bool operator==(const GridMap&) const = default;

private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> cells_;  // row-major
};

/// Uniformly random gene: orientation, anchor inside the grid, length in
/// [1, config.max_block_length].
BlockGene random_gene(const RunConfig& config, Rng& rng);

/// Renders a gene list onto a fresh grid. Cells that fall outside the
/// boundary are silently discarded; overlapping blocks merge.
GridMap rasterize(std::span<const BlockGene> genes, int width, int height);

/// Number of shelf cells in the grid (the fitness input b).
int occupied_count(const GridMap& grid);

}  // namespace shelfplan
