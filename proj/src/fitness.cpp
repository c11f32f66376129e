#include "shelfplan/fitness.hpp"

namespace shelfplan {

int neighbor_count(const GridMap& grid) {
    int pairs = 0;
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            if (!grid.shelf_at(x, y)) continue;
            if (x + 1 < grid.width() && grid.shelf_at(x + 1, y)) ++pairs;
            if (y + 1 < grid.height() && grid.shelf_at(x, y + 1)) ++pairs;
        }
    }
    return pairs;
}

double r_term(int n, RMode mode) {
    if (n >= 5) {
        const double reward = 0.05 * n;
        return mode == RMode::inverted ? -reward : reward;
    }
    if (n == 0) return 0.05;  // formula is singular at n = 0; pinned to the n = 1 value
    return 0.05 / n;
}

double a_term(bool s) { return s ? 0.05 : -0.5; }

FitnessBreakdown evaluate_grid(const GridMap& grid, Point entrance, Point exit, RMode mode) {
    FitnessBreakdown out;
    out.b = occupied_count(grid);
    out.s = navigability(grid, entrance, exit).s;
    out.n = neighbor_count(grid);
    out.f = out.b / 5.0;
    out.a = a_term(out.s);
    out.r = r_term(out.n, mode);
    out.total = out.f + out.a + out.r;
    return out;
}

const FitnessBreakdown& evaluate(Individual& individual, const RunConfig& config) {
    if (!individual.fitness) {
        const GridMap grid = rasterize(individual.genes, config.grid_width, config.grid_height);
        individual.fitness = evaluate_grid(grid, config.entrance, config.exit, config.r_mode);
    }
    return *individual.fitness;
}

}  // namespace shelfplan
