#include "signet/dataset.hpp"

#include <cmath>

#include "signet/errors.hpp"

namespace signet {

ReturnSeries compute_returns(const QuoteSeries& quotes) {
    quotes.validate();
    if (quotes.size() < 2) {
        throw ValidationError("quote series '" + quotes.ticker +
                              "': need at least 2 quotes to form a return");
    }
    ReturnSeries out;
    out.returns.resize(quotes.size() - 1);
    for (std::size_t i = 0; i + 1 < quotes.size(); ++i) {
        out.returns[i] = std::log(quotes.prices[i + 1] / quotes.prices[i]);
    }
    return out;
}

double ols_trend(std::span<const double> window) {
    if (window.size() != kLags) {
        throw ValidationError("ols_trend: window must hold exactly " +
                              std::to_string(kLags) + " returns");
    }
    // Slope against indices 1..9; the centered index sum of squares is 60.
    double num = 0.0;
    for (std::size_t i = 0; i < kLags; ++i) {
        num += (static_cast<double>(i) - 4.0) * window[i];
    }
    return num / 60.0;
}

Dataset build_dataset(const ReturnSeries& series, std::string ticker) {
    const std::size_t n = series.size();
    if (n < kLags + 1) {
        throw ValidationError("return series too short: have " + std::to_string(n) +
                              ", need at least " + std::to_string(kLags + 1));
    }
    Dataset ds;
    ds.ticker = std::move(ticker);
    const std::size_t count = n - kLags;
    ds.samples.resize(count);
    for (std::size_t j = 0; j < count; ++j) {
        Sample& s = ds.samples[j];
        const std::span<const double> window(series.returns.data() + j, kLags);
        for (std::size_t k = 0; k < kLags; ++k) s.x[k] = window[k];
        s.x[kLags] = ols_trend(window);
        s.y = series.returns[j + kLags];
    }
    ds.train_len = count / 2;
    return ds;
}

std::vector<double> targets_of(std::span<const Sample> samples) {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const Sample& s : samples) out.push_back(s.y);
    return out;
}

}  // namespace signet
