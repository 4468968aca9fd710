#pragma once

#include <cstdint>
#include <filesystem>

#include "signet/rprop.hpp"

namespace signet {

// Everything a `run` invocation needs; a flat key-value file is the single
// source of truth, with CLI flags layered on top by the caller.
struct ExperimentConfig {
    std::uint64_t base_seed = 1;  // run r uses seed base_seed + r
    int runs = 30;
    int threads = 0;  // worker pool size; 0 = hardware concurrency
    RpropConfig rprop{};
    double grid_max = 0.02;
    double grid_step = 0.0005;
    int initial_position = 1;  // +1 long / -1 short before the first signal
    std::filesystem::path metadata;
    std::filesystem::path quotes_dir;
    std::filesystem::path out_dir = "out";

    void validate() const;  // throws ConfigError; checks referenced paths exist
};

// "key = value" lines, '#' comments, blank lines ignored. Unknown keys are
// rejected. Relative paths resolve against the config file's directory.
//
// Keys: base_seed, runs, threads, metadata, quotes_dir, out,
//       rprop.initial_update, rprop.min_update, rprop.max_update,
//       rprop.increase_factor, rprop.decrease_factor, rprop.max_iterations,
//       trading.grid_max, trading.grid_step, trading.initial_position
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace signet
