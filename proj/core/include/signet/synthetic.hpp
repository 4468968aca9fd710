#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "signet/market_data.hpp"

namespace signet {

enum class SeriesKind { Sine, Ar1, Gaussian };

SeriesKind parse_series_kind(std::string_view s);  // "sine" | "ar1" | "gaussian"
std::string_view to_string(SeriesKind kind);

struct SyntheticSpec {
    SeriesKind kind = SeriesKind::Sine;
    std::size_t length = 1000;  // number of quotes
    std::uint64_t seed = 1;     // ar1 / gaussian only
    double sigma = 0.002;       // log-return innovation std dev
    double phi = 0.3;           // AR(1) coefficient, |phi| < 1
    double base_price = 100.0;
    double amplitude = 5.0;     // sine only
    double period = 50.0;       // sine only, in bars

    void validate() const;  // throws ConfigError
};

// Deterministic synthetic quote series on a one-minute grid:
//   sine:     p_t = base + amplitude * sin(2*pi*t / period)
//   gaussian: i.i.d. N(0, sigma) log returns compounded from base
//   ar1:      r_t = phi * r_{t-1} + N(0, sigma) log returns, r_0 = 0
QuoteSeries generate_series(const SyntheticSpec& spec, std::string ticker = {});

}  // namespace signet
