#pragma once

#include <optional>
#include <span>

namespace signet {

inline int sign_of(double v) {
    return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
}

// Buy & hold: plain sum of the targets of one half.
double buy_hold_return(std::span<const double> targets);

// Fraction of periods whose predicted sign equals the realized sign. Signs
// are three-valued (+1/0/-1) and a match requires equality.
double sign_prediction_ratio(std::span<const double> preds,
                             std::span<const double> targets);

// Profit of an omniscient trader: sum of absolute targets.
double max_return(std::span<const double> targets);

// Sum of sign(pred) * target; a zero prediction contributes nothing.
double total_return_rawsign(std::span<const double> preds,
                            std::span<const double> targets);

// total / max; defined as 0 when max is 0 (no movement, no achievable profit).
double ideal_profit_ratio(double total, double max);

// Mean over sample standard deviation (n-1) of the per-run totals. Needs at
// least two runs; zero dispersion yields nullopt rather than an infinity.
std::optional<double> sharpe_ratio(std::span<const double> run_totals);

// One trained run evaluated on the fixed split.
struct RunMetrics {
    double bh_train = 0.0;
    double return_rule_train = 0.0;
    double bh_test = 0.0;
    double sign_prediction = 0.0;
    double total_return_rule = 0.0;
    double total_return_rawsign = 0.0;
    double max_return = 0.0;
    double ideal_profit_ratio = 0.0;
    double threshold = 0.0;
};

struct Aggregate {
    double mean = 0.0;
    double stddev = 0.0;  // sample (n-1); 0 for a single value
};

Aggregate aggregate(std::span<const double> values);

}  // namespace signet
