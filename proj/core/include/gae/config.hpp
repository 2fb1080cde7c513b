#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gae/editing.hpp"
#include "gae/engine.hpp"

namespace gae {

/// Malformed configuration text (syntax, missing keys, unknown keys).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `problem` names no registered fitness problem.
class UnknownProblemError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// A numeric field is outside its allowed range.
class ValueRangeError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// An editor pattern is empty or not shorter than the chromosome.
class PatternLengthError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Name resolves to neither a preset nor an existing config file.
class UnknownPresetError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Filesystem failure, with the offending path in the message.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything needed to run one experiment: the problem, GA parameters,
/// editor family (empty = plain GA), and the run batch.
struct ExperimentConfig {
    std::string problem_id;
    GaParams params;
    EditorFamily family;
    int runs = 1;
    std::uint64_t base_seed = 0;
    bool track_schemata = false; // record block schema densities (royal road only)
    std::string output_dir;

    bool operator==(const ExperimentConfig&) const = default;
};

/// Parse the flat key-value config format (see README for the schema).
/// The result is fully validated.
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config_file(const std::filesystem::path& path);

/// Validation behind parse_config, usable on programmatically built configs.
/// Throws the named error types above.
void validate_config(const ExperimentConfig& config);

/// Render a config in the same format parse_config accepts; parsing the
/// result reproduces an equal config.
std::string serialize_config(const ExperimentConfig& config);

std::string_view to_string(EditingMode mode);
std::string_view to_string(EditKind kind);

} // namespace gae
