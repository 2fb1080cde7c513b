#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gae/population.hpp"
#include "gae/problems.hpp"

namespace gae {

/// Per-generation measurements of one run.
struct GenerationRecord {
    int generation = 0;
    double best_fitness = 0.0; // best evaluated fitness this generation
    double best_so_far = 0.0;  // running maximum over the run
    int edit_count = 0;        // edits applied across the population
    double diversity = 0.0;
    std::vector<double> schema_densities; // empty unless schemata are tracked
};

/// Full record of one seeded run.
struct RunTrace {
    std::uint64_t seed = 0;
    std::vector<GenerationRecord> records;
    BitString best_genotype;   // genotype of the best individual seen
    BitString best_transcript; // the transcript that achieved best_fitness
    double best_fitness = 0.0;

    double final_best_so_far() const {
        return records.empty() ? 0.0 : records.back().best_so_far;
    }
};

/// Bitwise allele diversity of the genotypes: mean over loci of
/// 1 - 2|0.5 - p_i| where p_i is the proportion of 1s at locus i.
/// 1 for an ideally mixed population, 0 once every locus is fixed.
double diversity(const Population& pop);

/// Fraction of the population whose genotype is an instance of the schema.
double schema_density(const Population& pop, const Schema& schema);

/// Per-generation mean, sample standard deviation and 95% confidence
/// half-width (1.96 s / sqrt(R)) of one metric across R runs.
struct AggregateSeries {
    std::vector<double> mean;
    std::vector<double> stddev;
    std::vector<double> ci95;
};

using MetricSelector = std::function<double(const GenerationRecord&)>;

/// Aggregate a metric across runs; requires at least two runs of equal length.
AggregateSeries aggregate_runs(std::span<const RunTrace> traces,
                               const MetricSelector& metric);

/// Editing activity summary: the per-generation mean edit count plus the
/// means over the first and last tenth of the generations.
struct EditingFrequencySummary {
    std::vector<double> mean_per_generation;
    double first_decile_mean = 0.0;
    double last_decile_mean = 0.0;
};

EditingFrequencySummary editing_frequency_summary(std::span<const RunTrace> traces);

} // namespace gae
