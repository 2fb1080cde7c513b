#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "gae/editing.hpp"
#include "gae/metrics.hpp"
#include "gae/population.hpp"
#include "gae/problems.hpp"
#include "gae/random.hpp"

namespace gae {

/// How edits relate to inheritance. Ontogenic: only the evaluated transcript
/// is edited, the genotype is inherited untouched. Lamarckian: the edited
/// transcript is written back into the genotype.
enum class EditingMode : std::uint8_t { Ontogenic, Lamarckian };

struct GaParams {
    int population_size = 40;
    int generations = 200;
    double crossover_rate = 0.7;
    double mutation_rate = 0.005;
    EditingMode editing_mode = EditingMode::Ontogenic;

    bool operator==(const GaParams&) const = default;
};

/// Index of the fitter of two contestants drawn uniformly with replacement.
/// Exact ties are broken by a coin flip.
std::size_t binary_tournament(const Population& pop, RandomSource& rng);

/// Exchange suffixes from position `cut` (1 <= cut <= n-1).
std::pair<BitString, BitString> crossover_at(const BitString& a, const BitString& b,
                                             std::size_t cut);

/// With probability crossover_rate pick a cut uniformly in {1..n-1} and
/// exchange suffixes; otherwise return copies of the parents.
std::pair<BitString, BitString> one_point_crossover(const BitString& a, const BitString& b,
                                                    double crossover_rate, RandomSource& rng);

/// Flip each allele independently with probability mutation_rate.
BitString point_mutation(const BitString& s, double mutation_rate, RandomSource& rng);

/// Transcribe and evaluate every member in place; returns the summed edit
/// count of the generation. In lamarckian mode the genotype is overwritten
/// by its transcript.
int evaluate_population(Population& pop, const FitnessProblem& problem,
                        const EditorFamily& family, EditingMode mode, RandomSource& rng);

/// Full generational replacement: tournament parents, one-point crossover,
/// point mutation, no elitism. Returns exactly pop.size() members with
/// unset fitness.
Population next_generation(const Population& pop, const GaParams& params, RandomSource& rng);

/// One seeded run: random initial population, then per generation
/// evaluate (with editing), record metrics, and replace. Optionally records
/// the density of each tracked schema per generation.
RunTrace run_ga(const FitnessProblem& problem, const GaParams& params,
                const EditorFamily& family, std::uint64_t seed,
                std::span<const Schema> tracked_schemata = {});

} // namespace gae
