#include "shelfplan/engine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace shelfplan {
namespace {

double total_of(const Individual& individual) {
    if (!individual.fitness) throw std::invalid_argument("individual has not been evaluated");
    return individual.fitness->total;
}

// indices sorted by fitness total, best first; ties keep population order
std::vector<std::size_t> ranked_indices(const Population& population) {
    std::vector<std::size_t> order(population.individuals.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
        return total_of(population.individuals[lhs]) > total_of(population.individuals[rhs]);
    });
    return order;
}

std::vector<double> population_totals(const Population& population) {
    std::vector<double> totals;
    totals.reserve(population.individuals.size());
    for (const Individual& individual : population.individuals)
        totals.push_back(total_of(individual));
    return totals;
}

}  // namespace

Population init_population(const RunConfig& config, Rng& rng) {
    Population population;
    population.generation = 0;
    population.individuals.reserve(static_cast<std::size_t>(config.population_size));
    for (int i = 0; i < config.population_size; ++i) {
        Individual individual;
        individual.genes.reserve(static_cast<std::size_t>(config.num_blocks));
        for (int g = 0; g < config.num_blocks; ++g)
            individual.genes.push_back(random_gene(config, rng));
        evaluate(individual, config);
        population.individuals.push_back(std::move(individual));
    }
    return population;
}

std::vector<double> shifted_weights(std::span<const double> totals) {
    std::vector<double> weights(totals.begin(), totals.end());
    if (weights.empty()) return weights;
    const double lowest = *std::min_element(weights.begin(), weights.end());
    for (double& w : weights) w = w - lowest + kRouletteEpsilon;
    return weights;
}

std::size_t sample_weighted(std::span<const double> weights, Rng& rng) {
    if (weights.empty()) throw std::invalid_argument("sample_weighted: no weights");
    double sum = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw std::invalid_argument("sample_weighted: weights must be positive");
        sum += w;
    }
    const double pick = rng.uniform01() * sum;
    double accum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        accum += weights[i];
        if (pick < accum) return i;
    }
    return weights.size() - 1;  // accumulated rounding can leave pick == sum
}

const Individual& roulette_select(const Population& population, Rng& rng) {
    if (population.individuals.empty())
        throw std::invalid_argument("roulette_select: empty population");
    const std::vector<double> weights = shifted_weights(population_totals(population));
    return population.individuals[sample_weighted(weights, rng)];
}

std::pair<Individual, Individual> two_point_crossover_at(const Individual& parent_a,
                                                         const Individual& parent_b, int cut_a,
                                                         int cut_b) {
    if (parent_a.genes.size() != parent_b.genes.size())
        throw std::invalid_argument("two_point_crossover: parents must have equal gene counts");
    const int count = static_cast<int>(parent_a.genes.size());
    if (cut_a < 0 || cut_b < cut_a || cut_b > count)
        throw std::invalid_argument("two_point_crossover: cut points out of range");

    Individual child_a{parent_a.genes, std::nullopt};
    Individual child_b{parent_b.genes, std::nullopt};
    for (int i = cut_a; i < cut_b; ++i) std::swap(child_a.genes[i], child_b.genes[i]);
    return {std::move(child_a), std::move(child_b)};
}

std::pair<Individual, Individual> two_point_crossover(const Individual& parent_a,
                                                      const Individual& parent_b, Rng& rng) {
    if (parent_a.genes.size() != parent_b.genes.size())
        throw std::invalid_argument("two_point_crossover: parents must have equal gene counts");
    const int count = static_cast<int>(parent_a.genes.size());
    if (count < 1) throw std::invalid_argument("two_point_crossover: parents have no genes");
    // two distinct cut positions, uniform over all C(count + 1, 2) pairs
    const int first = rng.uniform_int(0, count);
    int second = rng.uniform_int(0, count - 1);
    if (second >= first) ++second;
    return two_point_crossover_at(parent_a, parent_b, std::min(first, second),
                                  std::max(first, second));
}

Individual mutate(const Individual& individual, const RunConfig& config, Rng& rng) {
    Individual mutated{individual.genes, std::nullopt};
    for (BlockGene& gene : mutated.genes) {
        if (!rng.chance(config.mutation_prob)) continue;
        switch (rng.uniform_int(0, 3)) {
            case 0: gene.is_vertical = !gene.is_vertical; break;
            case 1: gene.x = rng.uniform_int(0, config.grid_width - 1); break;
            case 2: gene.y = rng.uniform_int(0, config.grid_height - 1); break;
            default: gene.length = rng.uniform_int(1, config.max_block_length); break;
        }
    }
    return mutated;
}

GenerationStats population_stats(const Population& population) {
    if (population.individuals.empty())
        throw std::invalid_argument("population_stats: empty population");
    GenerationStats stats;
    stats.generation = population.generation;
    stats.best = std::numeric_limits<double>::lowest();
    stats.min = std::numeric_limits<double>::max();
    double sum = 0.0;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < population.individuals.size(); ++i) {
        const double total = total_of(population.individuals[i]);
        sum += total;
        if (total > stats.best) {
            stats.best = total;
            best_index = i;
        }
        stats.min = std::min(stats.min, total);
    }
    stats.mean = sum / static_cast<double>(population.individuals.size());
    stats.best_individual = population.individuals[best_index];
    return stats;
}

std::pair<Population, GenerationStats> step(const Population& population, const RunConfig& config,
                                            Rng& rng) {
    const std::size_t size = population.individuals.size();
    if (size == 0) throw std::invalid_argument("step: empty population");

    Population next;
    next.generation = population.generation + 1;
    next.individuals.reserve(size);

    const std::vector<std::size_t> ranked = ranked_indices(population);
    const std::size_t elites =
        std::min(static_cast<std::size_t>(std::max(config.elite_count, 0)), size);
    for (std::size_t i = 0; i < elites; ++i)
        next.individuals.push_back(population.individuals[ranked[i]]);

    const std::vector<double> weights = shifted_weights(population_totals(population));
    while (next.individuals.size() < size) {
        const Individual& parent_a = population.individuals[sample_weighted(weights, rng)];
        const Individual& parent_b = population.individuals[sample_weighted(weights, rng)];

        std::pair<Individual, Individual> offspring =
            rng.chance(config.crossover_prob)
                ? two_point_crossover(parent_a, parent_b, rng)
                : std::pair<Individual, Individual>{parent_a, parent_b};

        Individual first = mutate(offspring.first, config, rng);
        Individual second = mutate(offspring.second, config, rng);
        evaluate(first, config);
        next.individuals.push_back(std::move(first));
        if (next.individuals.size() < size) {
            evaluate(second, config);
            next.individuals.push_back(std::move(second));
        }
    }

    GenerationStats stats = population_stats(next);
    return {std::move(next), std::move(stats)};
}

RunResult run(const RunConfig& config) {
    if (const auto problem = validate_config(config))
        throw std::invalid_argument("invalid config: " + *problem);

    Rng rng(config.rng_seed);
    RunResult result;
    result.population = init_population(config, rng);
    result.stats.reserve(static_cast<std::size_t>(config.generations) + 1);
    result.stats.push_back(population_stats(result.population));
    for (int g = 0; g < config.generations; ++g) {
        auto [next, stats] = step(result.population, config, rng);
        result.population = std::move(next);
        result.stats.push_back(std::move(stats));
    }
    return result;
}

}  // namespace shelfplan
