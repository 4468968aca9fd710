#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "signet/market_data.hpp"

namespace signet {

// Number of lagged returns per input vector; the trend slope makes the 10th
// feature.
inline constexpr std::size_t kLags = 9;
inline constexpr std::size_t kFeatures = kLags + 1;

// Consecutive-quote log returns; entry i is ln(p[i+1] / p[i]), so a series of
// L quotes yields L - 1 returns.
struct ReturnSeries {
    std::vector<double> returns;

    std::size_t size() const { return returns.size(); }
};

ReturnSeries compute_returns(const QuoteSeries& quotes);

// Slope of the least-squares line through (1, w[0]) .. (9, w[8]).
double ols_trend(std::span<const double> window);

struct Sample {
    std::array<double, kFeatures> x{};
    double y = 0.0;
};

struct Dataset {
    std::string ticker;
    std::vector<Sample> samples;  // time order, never shuffled
    std::size_t train_len = 0;    // floor(samples / 2)

    std::span<const Sample> train() const {
        return {samples.data(), train_len};
    }
    std::span<const Sample> test() const {
        return {samples.data() + train_len, samples.size() - train_len};
    }
};

// Sliding-window supervised pairs: sample j takes returns[j .. j+8] as the
// lagged features, their trend slope as the 10th, and returns[j+9] as the
// target. A series of R returns therefore yields R - 9 samples, every one
// with a target strictly later than all of its features.
Dataset build_dataset(const ReturnSeries& series, std::string ticker = {});

std::vector<double> targets_of(std::span<const Sample> samples);

}  // namespace signet
