#include "signet/config.hpp"

#include <fstream>

#include "signet/errors.hpp"
#include "signet/text.hpp"

namespace signet {
namespace {

int parse_bounded_int(const std::string& value, const char* key) {
    try {
        const long long v = parse_int(value);
        return static_cast<int>(v);
    } catch (const ParseError&) {
        throw ConfigError(std::string("config: bad integer for ") + key + ": '" + value + "'");
    }
}

double parse_cfg_double(const std::string& value, const char* key) {
    try {
        return parse_double(value);
    } catch (const ParseError&) {
        throw ConfigError(std::string("config: bad number for ") + key + ": '" + value + "'");
    }
}

}  // namespace

void ExperimentConfig::validate() const {
    if (runs < 1) throw ConfigError("config: runs must be >= 1");
    if (threads < 0) throw ConfigError("config: threads must be >= 0");
    rprop.validate();
    if (!(grid_step > 0.0)) throw ConfigError("config: trading.grid_step must be > 0");
    if (!(grid_max >= 0.0)) throw ConfigError("config: trading.grid_max must be >= 0");
    if (initial_position != 1 && initial_position != -1) {
        throw ConfigError("config: trading.initial_position must be 1 or -1");
    }
    if (metadata.empty()) throw ConfigError("config: metadata path not set");
    if (!std::filesystem::exists(metadata)) {
        throw ConfigError("config: metadata file does not exist: " + metadata.string());
    }
    if (quotes_dir.empty()) throw ConfigError("config: quotes_dir not set");
    if (!std::filesystem::is_directory(quotes_dir)) {
        throw ConfigError("config: quotes_dir is not a directory: " + quotes_dir.string());
    }
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());

    const std::filesystem::path base = path.has_parent_path() ? path.parent_path() : ".";
    auto resolve = [&](const std::string& value) {
        std::filesystem::path p(value);
        return p.is_absolute() ? p : base / p;
    };

    ExperimentConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string_view stripped = trim(line);
        if (stripped.empty()) continue;

        const auto eq = stripped.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": expected 'key = value'");
        }
        const std::string key(trim(stripped.substr(0, eq)));
        const std::string value(trim(stripped.substr(eq + 1)));
        if (key.empty() || value.empty()) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": empty key or value");
        }

        if (key == "base_seed") {
            const long long v = parse_bounded_int(value, "base_seed");
            if (v < 0) throw ConfigError("config: base_seed must be >= 0");
            cfg.base_seed = static_cast<std::uint64_t>(v);
        } else if (key == "runs") {
            cfg.runs = parse_bounded_int(value, "runs");
        } else if (key == "threads") {
            cfg.threads = parse_bounded_int(value, "threads");
        } else if (key == "metadata") {
            cfg.metadata = resolve(value);
        } else if (key == "quotes_dir") {
            cfg.quotes_dir = resolve(value);
        } else if (key == "out") {
            cfg.out_dir = resolve(value);
        } else if (key == "rprop.initial_update") {
            cfg.rprop.initial_update = parse_cfg_double(value, key.c_str());
        } else if (key == "rprop.min_update") {
            cfg.rprop.min_update = parse_cfg_double(value, key.c_str());
        } else if (key == "rprop.max_update") {
            cfg.rprop.max_update = parse_cfg_double(value, key.c_str());
        } else if (key == "rprop.increase_factor") {
            cfg.rprop.increase_factor = parse_cfg_double(value, key.c_str());
        } else if (key == "rprop.decrease_factor") {
            cfg.rprop.decrease_factor = parse_cfg_double(value, key.c_str());
        } else if (key == "rprop.max_iterations") {
            cfg.rprop.max_iterations = parse_bounded_int(value, key.c_str());
        } else if (key == "trading.grid_max") {
            cfg.grid_max = parse_cfg_double(value, key.c_str());
        } else if (key == "trading.grid_step") {
            cfg.grid_step = parse_cfg_double(value, key.c_str());
        } else if (key == "trading.initial_position") {
            cfg.initial_position = parse_bounded_int(value, key.c_str());
        } else {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                              ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

}  // namespace signet
