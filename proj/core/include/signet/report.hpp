#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "signet/harness.hpp"

namespace signet {

struct StockAggregates {
    Aggregate bh_train;
    Aggregate return_rule_train;
    Aggregate bh_test;
    Aggregate sign_prediction;
    Aggregate total_return_rule;
    Aggregate total_return_rawsign;
    Aggregate max_return;
    Aggregate ideal_profit_ratio;
    Aggregate threshold;
    std::optional<double> sharpe;  // nullopt for a single run or zero dispersion
    int runs = 0;
};

StockAggregates aggregate_runs(std::span<const RunMetrics> runs);

// Writes <out>/group_<k>.csv (k = 1..4, ascending percentile group, one table
// per nonempty group, tickers ordered by ascending market cap), a
// full-precision <out>/runs.csv ordered by (ticker, run), and
// <out>/scatter.csv with one row per stock plus one MEAN row per group.
void emit_report(const std::vector<StockReport>& reports,
                 const std::filesystem::path& out_dir);

// Rebuilds reports from a runs.csv; emit_report on the result reproduces the
// group and scatter files byte for byte.
std::vector<StockReport> load_runs_csv(const std::filesystem::path& path);

}  // namespace signet
