#pragma once

#include <cstdint>
#include <vector>

#include "signet/config.hpp"
#include "signet/dataset.hpp"
#include "signet/metrics.hpp"

namespace signet {

// Per-stock results of all runs; seeds[r] produced runs[r].
struct StockReport {
    StockMeta meta;
    std::vector<std::uint64_t> seeds;
    std::vector<RunMetrics> runs;
};

// Train once with the given seed, optimize the threshold band on the training
// half, evaluate everything on the test half.
RunMetrics evaluate_run(const Dataset& ds, const ExperimentConfig& cfg,
                        std::uint64_t seed);

// All runs for one stock, sequentially.
StockReport run_stock(const QuoteSeries& quotes, const StockMeta& meta,
                      const ExperimentConfig& cfg);

// Loads the metadata and every quote file (all must exist up front), then
// fans (stock, run) jobs out to a worker pool. Results land in slots indexed
// by (stock, run), so output is byte-identical for any pool size.
std::vector<StockReport> run_universe(const ExperimentConfig& cfg);

}  // namespace signet
