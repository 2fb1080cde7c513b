// gae — command-line harness for the editing GA experiments.
//
// Subcommands:
//   run <preset|file>   execute an experiment batch and write CSV artifacts
//   list                show the built-in preset catalog
//   validate <file>     parse and validate a config file
//
// Exit codes: 0 success; 2 malformed config or command line; 3 unknown
// preset or problem; 4 value out of range; 5 bad editor pattern length;
// 6 I/O failure; 1 anything else.

#include <cstdint>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "gae/experiment.hpp"
#include "gae/presets.hpp"
#include "gae/text.hpp"

namespace {

int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void print_config_summary(const gae::ExperimentConfig& config, std::ostream& out) {
    out << "problem " << config.problem_id << ", " << config.runs << " run"
        << (config.runs == 1 ? "" : "s") << " x " << config.params.generations
        << " generations, population " << config.params.population_size << ", "
        << config.family.size() << " editor" << (config.family.size() == 1 ? "" : "s") << ", "
        << gae::to_string(config.params.editing_mode) << " mode, seed " << config.base_seed
        << '\n';
}

int cmd_run(const std::string& target, const gae::ExperimentConfig& config, int workers) {
    std::cout << "running " << target << ": ";
    print_config_summary(config, std::cout);
    const gae::ExperimentResult result = gae::run_experiment(config, workers);

    double mean_final = 0.0;
    for (const gae::RunTrace& trace : result.traces) mean_final += trace.final_best_so_far();
    mean_final /= static_cast<double>(result.traces.size());
    std::cout << "mean final best-so-far: " << gae::format_double(mean_final) << '\n';
    std::cout << "wrote " << result.aggregate_csv.string() << '\n';
    std::cout << "wrote " << result.runs_csv.string() << '\n';
    std::cout << "wrote " << result.manifest.string() << '\n';
    return 0;
}

int cmd_list() {
    for (const gae::Preset& preset : gae::preset_catalog()) {
        std::cout << preset.id << '\n';
        std::cout << "    " << preset.description << '\n';
        std::cout << "    ";
        print_config_summary(preset.config, std::cout);
    }
    return 0;
}

int cmd_validate(const std::string& path) {
    const gae::ExperimentConfig config = gae::load_config_file(path);
    std::cout << path << " is valid: ";
    print_config_summary(config, std::cout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gae — editing-GA experiment harness"};
    app.require_subcommand(1);

    std::string target;
    std::uint64_t seed = 0;
    int runs = 0;
    std::string out_dir;
    std::string mode;
    bool no_editors = false;
    int workers = default_workers();

    CLI::App* run = app.add_subcommand("run", "Run an experiment from a preset or config file");
    run->add_option("target", target, "Preset id or config file path")->required();
    CLI::Option* seed_opt = run->add_option("--seed", seed, "Override the base seed");
    CLI::Option* runs_opt = run->add_option("--runs", runs, "Override the run count");
    CLI::Option* out_opt = run->add_option("--out", out_dir, "Override the output directory");
    CLI::Option* mode_opt =
        run->add_option("--editing-mode", mode, "Override the editing mode")
            ->check(CLI::IsMember({"ontogenic", "lamarckian"}));
    run->add_flag("--no-editors", no_editors, "Drop the editor family (plain GA)");
    run->add_option("--workers", workers, "Worker threads for parallel runs")
        ->check(CLI::PositiveNumber);

    CLI::App* list = app.add_subcommand("list", "List the built-in presets");

    CLI::App* validate = app.add_subcommand("validate", "Validate a config file");
    validate->add_option("file", target, "Config file path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (list->parsed()) return cmd_list();
        if (validate->parsed()) return cmd_validate(target);

        gae::ExperimentConfig config = gae::load_config(target);
        if (seed_opt->count() > 0) config.base_seed = seed;
        if (runs_opt->count() > 0) config.runs = runs;
        if (out_opt->count() > 0) config.output_dir = out_dir;
        if (mode_opt->count() > 0)
            config.params.editing_mode =
                mode == "lamarckian" ? gae::EditingMode::Lamarckian : gae::EditingMode::Ontogenic;
        if (no_editors) {
            config.family.editors.clear();
            if (const gae::Preset* preset = gae::find_preset(target))
                if (config.output_dir == preset->config.output_dir)
                    config.output_dir += "-noedit"; // keep the preset's artifacts intact
        }
        gae::validate_config(config);
        return cmd_run(target, config, workers);
    } catch (const gae::UnknownPresetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const gae::UnknownProblemError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const gae::ValueRangeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const gae::PatternLengthError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const gae::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const gae::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 6;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
