#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "shelfplan/core.hpp"
#include "shelfplan/fitness.hpp"

namespace shelfplan {

/// One generation of candidate layouts.
struct Population {
    std::vector<Individual> individuals;
    int generation = 0;
};

/// Per-generation summary used for the fitness trajectory and snapshots.
struct GenerationStats {
    int generation = 0;
    double best = 0.0;
    double mean = 0.0;
    double min = 0.0;
    Individual best_individual;  ///< copy of the generation's best, fitness included
};

/// Final population plus the full per-generation trajectory. Generation 0 is
/// included, so stats.size() == generations + 1.
struct RunResult {
    Population population;
    std::vector<GenerationStats> stats;
};

/// Roulette weights are fitness totals shifted above zero:
/// w_i = total_i - min_total + epsilon. The shift keeps the
/// fitness-proportionate ratio defined even when the a = -0.5 penalty drives
/// totals negative, and degrades to uniform selection when all totals tie.
inline constexpr double kRouletteEpsilon = 1e-6;

/// population_size individuals of num_blocks random genes each, evaluated.
Population init_population(const RunConfig& config, Rng& rng);

/// Strictly positive selection weights from raw fitness totals.
std::vector<double> shifted_weights(std::span<const double> totals);

/// Index draw with probability weight_i / sum(weights). Weights must be
/// positive; an empty span is an input error.
std::size_t sample_weighted(std::span<const double> weights, Rng& rng);

/// Fitness-proportionate parent pick over shifted weights. Every individual
/// must carry an evaluated fitness.
const Individual& roulette_select(const Population& population, Rng& rng);

/// Deterministic two-point crossover core: children swap the whole-gene
/// segment [cut_a, cut_b). Parents are untouched; children start with a
/// cleared fitness cache.
std::pair<Individual, Individual> two_point_crossover_at(const Individual& parent_a,
                                                         const Individual& parent_b, int cut_a,
                                                         int cut_b);

/// Two-point crossover with cuts drawn uniformly over 0 <= i < j <= gene
/// count. Gene tuples are exchanged whole, never split mid-gene.
std::pair<Individual, Individual> two_point_crossover(const Individual& parent_a,
                                                      const Individual& parent_b, Rng& rng);

/// Per-gene mutation: with probability config.mutation_prob exactly one of
/// the four fields is re-drawn (the orientation just flips). Returns a new
/// individual with the fitness cache cleared.
Individual mutate(const Individual& individual, const RunConfig& config, Rng& rng);

/// Best/mean/min totals of an evaluated population plus a copy of its best
/// member (first such member on ties).
GenerationStats population_stats(const Population& population);

/// One generational cycle: the elite_count best individuals are copied
/// unchanged, and the remainder is bred by roulette selection, two-point
/// crossover with probability crossover_prob (plain cloning otherwise) and
/// per-gene mutation, then evaluated. Offspring come in pairs; when the
/// remaining room is odd the last pair's second child is dropped.
std::pair<Population, GenerationStats> step(const Population& population, const RunConfig& config,
                                            Rng& rng);

/// Full run: fresh random population, then config.generations cycles.
/// Invalid configs are rejected up front (std::invalid_argument).
RunResult run(const RunConfig& config);

}  // namespace shelfplan
