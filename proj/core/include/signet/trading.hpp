#pragma once

#include <span>
#include <vector>

#include "signet/network.hpp"

namespace signet {

// Symmetric band [-X, X] around zero, in log-return units.
struct ThresholdRule {
    double half_width = 0.0;
};

// Long/short decisions from a prediction sequence: above X forces +1, below
// -X forces -1, inside the band the prior position is kept (seeded with
// `initial`).
std::vector<int> positions(std::span<const double> preds, ThresholdRule rule,
                           int initial);

// Sum of position-signed target returns.
double rule_return(std::span<const int> pos, std::span<const double> targets);

// {0, step, 2*step, ...} up to and including grid_max.
std::vector<double> threshold_grid(double grid_max, double grid_step);

// Grid candidate maximizing the training rule return; ties break toward the
// smallest X.
ThresholdRule optimize_range(const NetParams& p, std::span<const Sample> train,
                             std::span<const double> grid, int initial);

}  // namespace signet
