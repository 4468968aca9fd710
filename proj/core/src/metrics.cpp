#include "signet/metrics.hpp"

#include <cmath>

#include "signet/errors.hpp"

namespace signet {

double buy_hold_return(std::span<const double> targets) {
    if (targets.empty()) throw ValidationError("buy_hold_return: empty target list");
    double sum = 0.0;
    for (const double y : targets) sum += y;
    return sum;
}

double sign_prediction_ratio(std::span<const double> preds,
                             std::span<const double> targets) {
    if (preds.size() != targets.size()) {
        throw ValidationError("sign_prediction_ratio: length mismatch");
    }
    if (targets.empty()) throw ValidationError("sign_prediction_ratio: empty input");
    std::size_t matches = 0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        if (sign_of(preds[i]) == sign_of(targets[i])) ++matches;
    }
    return static_cast<double>(matches) / static_cast<double>(targets.size());
}

double max_return(std::span<const double> targets) {
    if (targets.empty()) throw ValidationError("max_return: empty target list");
    double sum = 0.0;
    for (const double y : targets) sum += std::abs(y);
    return sum;
}

double total_return_rawsign(std::span<const double> preds,
                            std::span<const double> targets) {
    if (preds.size() != targets.size()) {
        throw ValidationError("total_return_rawsign: length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        sum += static_cast<double>(sign_of(preds[i])) * targets[i];
    }
    return sum;
}

double ideal_profit_ratio(double total, double max) {
    if (!(max >= 0.0)) throw ValidationError("ideal_profit_ratio: max must be >= 0");
    if (max == 0.0) return 0.0;
    return total / max;
}

Aggregate aggregate(std::span<const double> values) {
    if (values.empty()) throw ValidationError("aggregate: empty value list");
    const auto n = static_cast<double>(values.size());
    bool constant = true;
    double sum = 0.0;
    for (const double v : values) {
        sum += v;
        constant = constant && v == values.front();
    }
    // A constant series has exactly zero spread; don't let summation rounding
    // turn it into a sliver of dispersion (or a huge Sharpe ratio).
    if (constant) return {values.front(), 0.0};
    const double mean = sum / n;
    double ss = 0.0;
    for (const double v : values) {
        const double d = v - mean;
        ss += d * d;
    }
    return {mean, std::sqrt(ss / (n - 1.0))};
}

std::optional<double> sharpe_ratio(std::span<const double> run_totals) {
    if (run_totals.size() < 2) {
        throw ValidationError("sharpe_ratio: need at least 2 runs");
    }
    const Aggregate a = aggregate(run_totals);
    if (a.stddev == 0.0) return std::nullopt;
    return a.mean / a.stddev;
}

}  // namespace signet
