#include "gae/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gae {

double diversity(const Population& pop) {
    if (pop.empty()) throw std::invalid_argument("diversity: empty population");
    const std::size_t n = pop.front().genotype.size();
    for (const auto& ind : pop)
        if (ind.genotype.size() != n)
            throw std::invalid_argument("diversity: mixed chromosome lengths");
    if (n == 0) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t ones = 0;
        for (const auto& ind : pop) ones += ind.genotype[i];
        const double p = static_cast<double>(ones) / static_cast<double>(pop.size());
        total += 1.0 - 2.0 * std::abs(0.5 - p);
    }
    return total / static_cast<double>(n);
}

double schema_density(const Population& pop, const Schema& schema) {
    if (pop.empty()) throw std::invalid_argument("schema_density: empty population");
    std::size_t hits = 0;
    for (const auto& ind : pop)
        if (schema.matches(ind.genotype)) ++hits;
    return static_cast<double>(hits) / static_cast<double>(pop.size());
}

AggregateSeries aggregate_runs(std::span<const RunTrace> traces, const MetricSelector& select) {
    if (traces.size() < 2)
        throw std::invalid_argument("aggregate_runs: needs at least two runs, got " +
                                    std::to_string(traces.size()));
    const std::size_t generations = traces.front().records.size();
    for (const auto& trace : traces)
        if (trace.records.size() != generations)
            throw std::invalid_argument("aggregate_runs: traces differ in length");

    const double runs = static_cast<double>(traces.size());
    AggregateSeries out;
    out.mean.resize(generations);
    out.stddev.resize(generations);
    out.ci95.resize(generations);
    for (std::size_t g = 0; g < generations; ++g) {
        double sum = 0.0;
        for (const auto& trace : traces) sum += select(trace.records[g]);
        const double mean = sum / runs;
        double ss = 0.0;
        for (const auto& trace : traces) {
            const double d = select(trace.records[g]) - mean;
            ss += d * d;
        }
        const double sd = std::sqrt(ss / (runs - 1.0));
        out.mean[g] = mean;
        out.stddev[g] = sd;
        out.ci95[g] = 1.96 * sd / std::sqrt(runs);
    }
    return out;
}

EditingFrequencySummary editing_frequency_summary(std::span<const RunTrace> traces) {
    if (traces.empty())
        throw std::invalid_argument("editing_frequency_summary: no traces");
    const std::size_t generations = traces.front().records.size();
    if (generations == 0)
        throw std::invalid_argument("editing_frequency_summary: traces have no records");
    for (const auto& trace : traces)
        if (trace.records.size() != generations)
            throw std::invalid_argument("editing_frequency_summary: traces differ in length");

    EditingFrequencySummary out;
    out.mean_per_generation.resize(generations);
    for (std::size_t g = 0; g < generations; ++g) {
        double sum = 0.0;
        for (const auto& trace : traces)
            sum += static_cast<double>(trace.records[g].edit_count);
        out.mean_per_generation[g] = sum / static_cast<double>(traces.size());
    }

    const std::size_t window = std::max<std::size_t>(1, generations / 10);
    double first = 0.0;
    double last = 0.0;
    for (std::size_t g = 0; g < window; ++g) {
        first += out.mean_per_generation[g];
        last += out.mean_per_generation[generations - window + g];
    }
    out.first_decile_mean = first / static_cast<double>(window);
    out.last_decile_mean = last / static_cast<double>(window);
    return out;
}

} // namespace gae
