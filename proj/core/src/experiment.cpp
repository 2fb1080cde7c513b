#include "gae/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "gae/engine.hpp"
#include "gae/problems.hpp"
#include "gae/text.hpp"

namespace gae {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << content;
    out.flush();
    if (!out) throw IoError("error writing: " + path.string());
}

std::vector<double> mean_over_runs(std::span<const RunTrace> traces,
                                   const MetricSelector& select) {
    const std::size_t generations = traces.front().records.size();
    std::vector<double> mean(generations, 0.0);
    for (const RunTrace& trace : traces)
        for (std::size_t g = 0; g < generations; ++g) mean[g] += select(trace.records[g]);
    for (double& m : mean) m /= static_cast<double>(traces.size());
    return mean;
}

std::string build_aggregate_csv(std::span<const RunTrace> traces, std::size_t schema_count) {
    std::ostringstream out;
    out << "generation,mean_best_so_far,ci95,mean_edit_count,mean_diversity";
    for (std::size_t b = 0; b < schema_count; ++b) out << ",density_block" << (b + 1);
    out << '\n';

    const auto best_so_far = [](const GenerationRecord& r) { return r.best_so_far; };
    std::vector<double> mean_best;
    std::vector<double> ci95;
    if (traces.size() >= 2) {
        AggregateSeries agg = aggregate_runs(traces, best_so_far);
        mean_best = std::move(agg.mean);
        ci95 = std::move(agg.ci95);
    } else { // a single run has no spread to report
        mean_best = mean_over_runs(traces, best_so_far);
        ci95.assign(mean_best.size(), 0.0);
    }
    const auto mean_edits = mean_over_runs(
        traces, [](const GenerationRecord& r) { return static_cast<double>(r.edit_count); });
    const auto mean_diversity =
        mean_over_runs(traces, [](const GenerationRecord& r) { return r.diversity; });
    std::vector<std::vector<double>> mean_density(schema_count);
    for (std::size_t b = 0; b < schema_count; ++b)
        mean_density[b] = mean_over_runs(
            traces, [b](const GenerationRecord& r) { return r.schema_densities[b]; });

    for (std::size_t g = 0; g < mean_best.size(); ++g) {
        out << g << ',' << format_double(mean_best[g]) << ',' << format_double(ci95[g]) << ','
            << format_double(mean_edits[g]) << ',' << format_double(mean_diversity[g]);
        for (std::size_t b = 0; b < schema_count; ++b)
            out << ',' << format_double(mean_density[b][g]);
        out << '\n';
    }
    return out.str();
}

std::string build_runs_csv(std::span<const RunTrace> traces) {
    std::ostringstream out;
    out << "run,seed,final_best_so_far,total_edits,final_diversity\n";
    for (std::size_t i = 0; i < traces.size(); ++i) {
        const RunTrace& trace = traces[i];
        long total_edits = 0;
        for (const GenerationRecord& r : trace.records) total_edits += r.edit_count;
        out << i << ',' << trace.seed << ',' << format_double(trace.final_best_so_far()) << ','
            << total_edits << ',' << format_double(trace.records.back().diversity) << '\n';
    }
    return out.str();
}

std::string build_manifest(const ExperimentConfig& config) {
    std::ostringstream out;
    out << "# experiment manifest; reloadable with `gae run` or `gae validate`\n";
    out << serialize_config(config);
    out << "# derived run seeds\n";
    for (int i = 0; i < config.runs; ++i)
        out << "#   run " << i << ": " << derive_run_seed(config.base_seed, i) << '\n';
    return out.str();
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, int workers) {
    validate_config(config);
    const auto problem = make_problem(config.problem_id);

    std::span<const Schema> tracked;
    if (config.track_schemata) tracked = RoyalRoadS1::schemata();

    const std::size_t runs = static_cast<std::size_t>(config.runs);
    std::vector<RunTrace> traces(runs);
    const std::size_t pool =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, runs);

    if (pool == 1) {
        for (std::size_t i = 0; i < runs; ++i)
            traces[i] = run_ga(*problem, config.params, config.family,
                               derive_run_seed(config.base_seed, i), tracked);
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex failure_mutex;
        std::exception_ptr failure;
        const auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= runs) return;
                try {
                    traces[i] = run_ga(*problem, config.params, config.family,
                                       derive_run_seed(config.base_seed, i), tracked);
                } catch (...) {
                    const std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (std::size_t t = 0; t < pool; ++t) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    const std::filesystem::path dir{config.output_dir};
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory: " + dir.string() +
                          " (" + ec.message() + ")");

    ExperimentResult result;
    result.config = config;
    result.aggregate_csv = dir / "aggregate.csv";
    result.runs_csv = dir / "runs.csv";
    result.manifest = dir / "manifest.cfg";
    write_file(result.aggregate_csv, build_aggregate_csv(traces, tracked.size()));
    write_file(result.runs_csv, build_runs_csv(traces));
    write_file(result.manifest, build_manifest(config));
    result.traces = std::move(traces);
    return result;
}

} // namespace gae
