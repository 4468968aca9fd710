#include "signet/trading.hpp"

#include <cmath>

#include "signet/errors.hpp"
#include "signet/metrics.hpp"

namespace signet {

std::vector<int> positions(std::span<const double> preds, ThresholdRule rule,
                           int initial) {
    if (!(rule.half_width >= 0.0)) {
        throw ValidationError("positions: threshold half-width must be >= 0");
    }
    if (initial != 1 && initial != -1) {
        throw ValidationError("positions: initial position must be +1 or -1");
    }
    std::vector<int> out;
    out.reserve(preds.size());
    int pos = initial;
    for (const double p : preds) {
        if (p > rule.half_width) {
            pos = 1;
        } else if (p < -rule.half_width) {
            pos = -1;
        }
        out.push_back(pos);
    }
    return out;
}

double rule_return(std::span<const int> pos, std::span<const double> targets) {
    if (pos.size() != targets.size()) {
        throw ValidationError("rule_return: position/target length mismatch");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        sum += static_cast<double>(pos[i]) * targets[i];
    }
    return sum;
}

std::vector<double> threshold_grid(double grid_max, double grid_step) {
    if (!(grid_step > 0.0)) throw ConfigError("threshold grid: step must be > 0");
    if (!(grid_max >= 0.0)) throw ConfigError("threshold grid: max must be >= 0");
    std::vector<double> grid;
    // k * step rather than accumulation, so grid points are reproducible.
    for (std::size_t k = 0;; ++k) {
        const double x = static_cast<double>(k) * grid_step;
        if (x > grid_max * (1.0 + 1e-12)) break;
        grid.push_back(x);
    }
    return grid;
}

ThresholdRule optimize_range(const NetParams& p, std::span<const Sample> train,
                             std::span<const double> grid, int initial) {
    if (grid.empty()) throw ConfigError("optimize_range: empty threshold grid");
    if (train.empty()) throw ValidationError("optimize_range: empty training set");

    const std::vector<double> preds = predict_all(p, train);
    const std::vector<double> targets = targets_of(train);

    bool have_best = false;
    double best_x = 0.0;
    double best_score = 0.0;
    for (const double x : grid) {
        const double score = rule_return(positions(preds, ThresholdRule{x}, initial), targets);
        if (!have_best || score > best_score ||
            (score == best_score && x < best_x)) {
            have_best = true;
            best_x = x;
            best_score = score;
        }
    }
    return ThresholdRule{best_x};
}

}  // namespace signet
