#include "gae/config.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "gae/problems.hpp"
#include "gae/text.hpp"

namespace gae {

std::string_view to_string(EditingMode mode) {
    return mode == EditingMode::Ontogenic ? "ontogenic" : "lamarckian";
}

std::string_view to_string(EditKind kind) {
    return kind == EditKind::Insert ? "insert" : "delete";
}

namespace {

[[noreturn]] void bad_line(int line_no, const std::string& why) {
    throw ConfigError("line " + std::to_string(line_no) + ": " + why);
}

std::vector<std::string> tokenize(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
    return tokens;
}

double require_double(const std::string& tok, const std::string& key, int line_no) {
    const auto v = parse_double(tok);
    if (!v) bad_line(line_no, key + ": expected a number, got '" + tok + "'");
    return *v;
}

int require_int(const std::string& tok, const std::string& key, int line_no) {
    const auto v = parse_int(tok);
    if (!v || *v < INT32_MIN || *v > INT32_MAX)
        bad_line(line_no, key + ": expected an integer, got '" + tok + "'");
    return static_cast<int>(*v);
}

Editor parse_editor_line(const std::vector<std::string>& tokens, int line_no) {
    if (tokens.size() != 5)
        bad_line(line_no, "editor: expected <pattern> <concentration> <insert|delete> <amount>");
    Editor editor;
    try {
        editor.pattern = BitString::parse(tokens[1]);
    } catch (const std::invalid_argument& e) {
        bad_line(line_no, std::string("editor: ") + e.what());
    }
    editor.concentration = require_double(tokens[2], "editor concentration", line_no);
    if (tokens[3] == "insert")
        editor.function.kind = EditKind::Insert;
    else if (tokens[3] == "delete")
        editor.function.kind = EditKind::Delete;
    else
        bad_line(line_no, "editor: unknown function '" + tokens[3] + "'");
    editor.function.amount = require_int(tokens[4], "editor amount", line_no);
    return editor;
}

} // namespace

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig config;
    config.output_dir = "out";
    bool have_problem = false;
    std::vector<std::string> seen;

    const auto once = [&](const std::string& key, int line_no) {
        for (const auto& k : seen)
            if (k == key) bad_line(line_no, "duplicate key '" + key + "'");
        seen.push_back(key);
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto tokens = tokenize(line);
        const std::string& key = tokens[0];

        if (key == "editor") {
            config.family.editors.push_back(parse_editor_line(tokens, line_no));
            continue;
        }
        if (tokens.size() != 2)
            bad_line(line_no, "'" + key + "' expects exactly one value");
        const std::string& value = tokens[1];

        if (key == "problem") {
            once(key, line_no);
            config.problem_id = value;
            have_problem = true;
        } else if (key == "population") {
            once(key, line_no);
            config.params.population_size = require_int(value, key, line_no);
        } else if (key == "generations") {
            once(key, line_no);
            config.params.generations = require_int(value, key, line_no);
        } else if (key == "crossover") {
            once(key, line_no);
            config.params.crossover_rate = require_double(value, key, line_no);
        } else if (key == "mutation") {
            once(key, line_no);
            config.params.mutation_rate = require_double(value, key, line_no);
        } else if (key == "editing-mode") {
            once(key, line_no);
            if (value == "ontogenic")
                config.params.editing_mode = EditingMode::Ontogenic;
            else if (value == "lamarckian")
                config.params.editing_mode = EditingMode::Lamarckian;
            else
                bad_line(line_no, "editing-mode must be 'ontogenic' or 'lamarckian'");
        } else if (key == "runs") {
            once(key, line_no);
            config.runs = require_int(value, key, line_no);
        } else if (key == "seed") {
            once(key, line_no);
            const auto v = parse_uint64(value);
            if (!v) bad_line(line_no, "seed: expected an unsigned integer, got '" + value + "'");
            config.base_seed = *v;
        } else if (key == "track-schemata") {
            once(key, line_no);
            if (value == "true")
                config.track_schemata = true;
            else if (value == "false")
                config.track_schemata = false;
            else
                bad_line(line_no, "track-schemata must be 'true' or 'false'");
        } else if (key == "output") {
            once(key, line_no);
            config.output_dir = value;
        } else {
            bad_line(line_no, "unknown key '" + key + "'");
        }
    }

    if (!have_problem) throw ConfigError("missing required key 'problem'");
    validate_config(config);
    return config;
}

ExperimentConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("error reading config file: " + path.string());
    return parse_config(buf.str());
}

void validate_config(const ExperimentConfig& config) {
    const auto problem = make_problem(config.problem_id);
    if (!problem) throw UnknownProblemError("unknown problem '" + config.problem_id + "'");
    const std::size_t length = problem->chromosome_length();

    const auto range = [](bool ok, const std::string& why) {
        if (!ok) throw ValueRangeError(why);
    };
    range(config.params.population_size >= 2,
          "population must be at least 2, got " +
              std::to_string(config.params.population_size));
    range(config.params.generations >= 1,
          "generations must be at least 1, got " + std::to_string(config.params.generations));
    range(config.params.crossover_rate >= 0.0 && config.params.crossover_rate <= 1.0,
          "crossover rate must lie in [0, 1], got " +
              format_double(config.params.crossover_rate));
    range(config.params.mutation_rate >= 0.0 && config.params.mutation_rate <= 1.0,
          "mutation rate must lie in [0, 1], got " + format_double(config.params.mutation_rate));
    range(config.runs >= 1, "runs must be at least 1, got " + std::to_string(config.runs));

    for (std::size_t i = 0; i < config.family.size(); ++i) {
        const Editor& editor = config.family.editors[i];
        const std::string label = "editor " + std::to_string(i + 1);
        if (editor.pattern.empty() || editor.pattern.size() >= length)
            throw PatternLengthError(label + ": pattern length " +
                                     std::to_string(editor.pattern.size()) +
                                     " must be in [1, " + std::to_string(length - 1) +
                                     "] for " + config.problem_id);
        range(editor.concentration >= 0.0 && editor.concentration <= 1.0,
              label + ": concentration must lie in [0, 1], got " +
                  format_double(editor.concentration));
        range(editor.function.amount >= 1, label + ": amount must be at least 1, got " +
                                               std::to_string(editor.function.amount));
    }

    if (config.track_schemata && config.problem_id != "royal-road-s1")
        throw ConfigError("track-schemata is only available for royal-road-s1");
    if (config.output_dir.empty()) throw ConfigError("output directory must not be empty");
}

std::string serialize_config(const ExperimentConfig& config) {
    std::ostringstream out;
    out << "problem " << config.problem_id << '\n';
    out << "population " << config.params.population_size << '\n';
    out << "generations " << config.params.generations << '\n';
    out << "crossover " << format_double(config.params.crossover_rate) << '\n';
    out << "mutation " << format_double(config.params.mutation_rate) << '\n';
    out << "editing-mode " << to_string(config.params.editing_mode) << '\n';
    out << "runs " << config.runs << '\n';
    out << "seed " << config.base_seed << '\n';
    out << "track-schemata " << (config.track_schemata ? "true" : "false") << '\n';
    out << "output " << config.output_dir << '\n';
    for (const Editor& editor : config.family.editors) {
        out << "editor " << editor.pattern.to_string() << ' '
            << format_double(editor.concentration) << ' ' << to_string(editor.function.kind)
            << ' ' << editor.function.amount << '\n';
    }
    return out.str();
}

} // namespace gae
