#pragma once

#include <filesystem>
#include <vector>

#include "gae/config.hpp"
#include "gae/metrics.hpp"

namespace gae {

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<RunTrace> traces;
    std::filesystem::path aggregate_csv;
    std::filesystem::path runs_csv;
    std::filesystem::path manifest;
};

/// Execute the configured batch of runs (run i is seeded with
/// derive_run_seed(base_seed, i)) and write three artifacts into
/// config.output_dir:
///   aggregate.csv  per-generation means across runs
///   runs.csv       one summary row per run
///   manifest.cfg   the full config echoed back (reloadable)
/// Output is byte-identical for identical configs, independent of the
/// worker count. Workers are clamped to [1, runs].
ExperimentResult run_experiment(const ExperimentConfig& config, int workers = 1);

} // namespace gae
