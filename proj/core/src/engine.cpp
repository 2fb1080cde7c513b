#include "gae/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace gae {

std::size_t binary_tournament(const Population& pop, RandomSource& rng) {
    if (pop.empty()) throw std::invalid_argument("binary_tournament: empty population");
    const std::size_t a = rng.next_index(pop.size());
    const std::size_t b = rng.next_index(pop.size());
    if (pop[a].fitness > pop[b].fitness) return a;
    if (pop[b].fitness > pop[a].fitness) return b;
    return rng.next_allele() ? a : b;
}

std::pair<BitString, BitString> crossover_at(const BitString& a, const BitString& b,
                                             std::size_t cut) {
    if (a.size() != b.size())
        throw std::invalid_argument("crossover_at: parents differ in length");
    if (cut == 0 || cut >= a.size())
        throw std::invalid_argument("crossover_at: cut must lie strictly inside the string");
    BitString c1 = a;
    BitString c2 = b;
    for (std::size_t i = cut; i < a.size(); ++i) {
        c1.set(i, b[i]);
        c2.set(i, a[i]);
    }
    return {std::move(c1), std::move(c2)};
}

std::pair<BitString, BitString> one_point_crossover(const BitString& a, const BitString& b,
                                                    double crossover_rate, RandomSource& rng) {
    if (a.size() != b.size())
        throw std::invalid_argument("one_point_crossover: parents differ in length");
    if (a.size() >= 2 && rng.next_double() < crossover_rate) {
        const std::size_t cut = 1 + rng.next_index(a.size() - 1);
        return crossover_at(a, b, cut);
    }
    return {a, b};
}

BitString point_mutation(const BitString& s, double mutation_rate, RandomSource& rng) {
    BitString out = s;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (rng.next_double() < mutation_rate) out.flip(i);
    return out;
}

int evaluate_population(Population& pop, const FitnessProblem& problem,
                        const EditorFamily& family, EditingMode mode, RandomSource& rng) {
    int total_edits = 0;
    for (auto& ind : pop) {
        auto result = transcribe(ind.genotype, family, rng);
        ind.transcript = std::move(result.transcript);
        ind.fitness = problem.evaluate(ind.transcript);
        ind.edits = static_cast<int>(result.events.size());
        total_edits += ind.edits;
        if (mode == EditingMode::Lamarckian) ind.genotype = ind.transcript;
    }
    return total_edits;
}

Population next_generation(const Population& pop, const GaParams& params, RandomSource& rng) {
    Population next;
    next.reserve(pop.size());
    while (next.size() < pop.size()) {
        const auto& p1 = pop[binary_tournament(pop, rng)];
        const auto& p2 = pop[binary_tournament(pop, rng)];
        auto [c1, c2] = one_point_crossover(p1.genotype, p2.genotype, params.crossover_rate, rng);
        next.push_back({point_mutation(c1, params.mutation_rate, rng), BitString{}, 0.0, 0});
        if (next.size() < pop.size())
            next.push_back({point_mutation(c2, params.mutation_rate, rng), BitString{}, 0.0, 0});
    }
    return next;
}

RunTrace run_ga(const FitnessProblem& problem, const GaParams& params,
                const EditorFamily& family, std::uint64_t seed,
                std::span<const Schema> tracked_schemata) {
    if (params.population_size < 2)
        throw std::invalid_argument("run_ga: population_size must be at least 2");
    if (params.generations < 1)
        throw std::invalid_argument("run_ga: generations must be at least 1");

    RandomSource rng(seed);
    const std::size_t n = problem.chromosome_length();

    Population pop;
    pop.reserve(static_cast<std::size_t>(params.population_size));
    for (int i = 0; i < params.population_size; ++i)
        pop.push_back({random_bitstring(n, rng), BitString{}, 0.0, 0});

    RunTrace trace;
    trace.seed = seed;
    trace.records.reserve(static_cast<std::size_t>(params.generations));

    double best_so_far = 0.0;
    for (int g = 0; g < params.generations; ++g) {
        const int edits =
            evaluate_population(pop, problem, family, params.editing_mode, rng);

        const auto best = std::max_element(
            pop.begin(), pop.end(),
            [](const Individual& a, const Individual& b) { return a.fitness < b.fitness; });
        if (g == 0 || best->fitness > trace.best_fitness) {
            trace.best_fitness = best->fitness;
            trace.best_genotype = best->genotype;
            trace.best_transcript = best->transcript;
        }
        best_so_far = (g == 0) ? best->fitness : std::max(best_so_far, best->fitness);

        GenerationRecord record;
        record.generation = g;
        record.best_fitness = best->fitness;
        record.best_so_far = best_so_far;
        record.edit_count = edits;
        record.diversity = diversity(pop);
        record.schema_densities.reserve(tracked_schemata.size());
        for (const auto& schema : tracked_schemata)
            record.schema_densities.push_back(schema_density(pop, schema));
        trace.records.push_back(std::move(record));

        if (g + 1 < params.generations) pop = next_generation(pop, params, rng);
    }
    return trace;
}

} // namespace gae
