#pragma once

#include "shelfplan/core.hpp"
#include "shelfplan/pathfind.hpp"

namespace shelfplan {

/// Number of unordered 4-adjacent shelf-cell pairs in the whole grid (the
/// fitness input n). Contacts inside a single block count too.
int neighbor_count(const GridMap& grid);

/// Adjacency term: 0.05 * n for n >= 5, otherwise 0.05 / n, with the n == 0
/// singularity pinned to 0.05 (the n == 1 value). RMode::inverted negates
/// the n >= 5 branch.
double r_term(int n, RMode mode = RMode::paper);

/// Navigability term: +0.05 when s holds, -0.5 otherwise.
double a_term(bool s);

/// Scores an already rasterized layout.
FitnessBreakdown evaluate_grid(const GridMap& grid, Point entrance, Point exit,
                               RMode mode = RMode::paper);

/// Rasterizes the individual's genes and scores the result, caching the
/// breakdown on the individual. A cached value is returned as-is; operators
/// that change genes must clear the cache.
const FitnessBreakdown& evaluate(Individual& individual, const RunConfig& config);

}  // namespace shelfplan
