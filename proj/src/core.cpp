#include "shelfplan/core.hpp"

#include <algorithm>

namespace shelfplan {

std::optional<std::string> validate_config(const RunConfig& config) {
    const auto inside = [&config](Point p) {
        return p.x >= 0 && p.x < config.grid_width && p.y >= 0 && p.y < config.grid_height;
    };
    if (config.grid_width < 1 || config.grid_height < 1)
        return "grid dimensions must be at least 1x1";
    if (config.num_blocks < 1) return "num_blocks must be at least 1";
    const int longest_side = std::max(config.grid_width, config.grid_height);
    if (config.max_block_length < 1 || config.max_block_length > longest_side)
        return "max_block_length must be in [1, max(grid_width, grid_height)]";
    if (config.population_size < 2) return "population_size must be at least 2";
    if (config.generations < 0) return "generations must be non-negative";
    if (config.crossover_prob < 0.0 || config.crossover_prob > 1.0)
        return "crossover_prob must be in [0, 1]";
    if (config.mutation_prob < 0.0 || config.mutation_prob > 1.0)
        return "mutation_prob must be in [0, 1]";
    if (config.elite_count < 0 || config.elite_count >= config.population_size)
        return "elite_count must be in [0, population_size)";
    if (!inside(config.entrance)) return "entrance is outside the grid";
    if (!inside(config.exit)) return "exit is outside the grid";
    if (config.entrance == config.exit) return "entrance and exit must differ";
    return std::nullopt;
}

BlockGene random_gene(const RunConfig& config, Rng& rng) {
    BlockGene gene;
    gene.is_vertical = rng.uniform_int(0, 1) == 1;
    gene.x = rng.uniform_int(0, config.grid_width - 1);
    gene.y = rng.uniform_int(0, config.grid_height - 1);
    gene.length = rng.uniform_int(1, config.max_block_length);
    return gene;
}

GridMap rasterize(std::span<const BlockGene> genes, int width, int height) {
    GridMap grid(width, height);
    for (const BlockGene& gene : genes) {
        for (int k = 0; k < gene.length; ++k) {
            const int x = gene.is_vertical ? gene.x : gene.x + k;
            const int y = gene.is_vertical ? gene.y + k : gene.y;
            if (grid.in_bounds(x, y)) grid.set_shelf(x, y);
        }
    }
    return grid;
}

int occupied_count(const GridMap& grid) {
    int count = 0;
    for (int y = 0; y < grid.height(); ++y)
        for (int x = 0; x < grid.width(); ++x)
            if (grid.shelf_at(x, y)) ++count;
    return count;
}

}  // namespace shelfplan
