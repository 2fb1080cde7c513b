#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gae/config.hpp"

namespace gae {

/// A named, ready-to-run experiment configuration.
struct Preset {
    std::string id;
    std::string description;
    ExperimentConfig config;
};

/// All built-in presets. Every preset with editors has a "<id>-plain"
/// counterpart with the same GA parameters and no editors.
const std::vector<Preset>& preset_catalog();

const Preset* find_preset(std::string_view id);

/// Resolve a preset id, falling back to a config file path.
ExperimentConfig load_config(const std::string& preset_or_path);

/// Random editor family used by the generated presets: for each editor,
/// length uniform in [min_length, max_length], uniform pattern alleles,
/// concentration uniform in [0,1) rounded to 4 decimals, kind a coin flip,
/// amount uniform in {1..5}. All draws come from RandomSource(seed), so a
/// (count, lengths, seed) triple pins the family exactly.
EditorFamily generate_editor_family(std::size_t count, std::size_t min_length,
                                    std::size_t max_length, std::uint64_t seed);

} // namespace gae
