#include "signet/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "signet/errors.hpp"
#include "signet/rng.hpp"

namespace signet {
namespace {

// 2020-01-02T09:30:00Z, one-minute bars.
constexpr std::int64_t kStartMicros = 1'577'957'400LL * 1'000'000;
constexpr std::int64_t kBarMicros = 60LL * 1'000'000;

std::vector<Timestamp> minute_grid(std::size_t n) {
    std::vector<Timestamp> ts(n);
    for (std::size_t i = 0; i < n; ++i) {
        ts[i] = Timestamp{kStartMicros + static_cast<std::int64_t>(i) * kBarMicros};
    }
    return ts;
}

}  // namespace

SeriesKind parse_series_kind(std::string_view s) {
    if (s == "sine") return SeriesKind::Sine;
    if (s == "ar1") return SeriesKind::Ar1;
    if (s == "gaussian") return SeriesKind::Gaussian;
    throw ConfigError("unknown series kind: '" + std::string(s) +
                      "' (expected sine, ar1 or gaussian)");
}

std::string_view to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::Sine: return "sine";
        case SeriesKind::Ar1: return "ar1";
        case SeriesKind::Gaussian: return "gaussian";
    }
    return "?";
}

void SyntheticSpec::validate() const {
    if (length < 2) throw ConfigError("synthetic series: length must be >= 2");
    if (!(base_price > 0.0)) throw ConfigError("synthetic series: base price must be > 0");
    if (!(sigma > 0.0)) throw ConfigError("synthetic series: sigma must be > 0");
    if (!(std::abs(phi) < 1.0)) throw ConfigError("synthetic series: need |phi| < 1");
    if (!(period > 0.0)) throw ConfigError("synthetic series: period must be > 0");
    if (!(amplitude >= 0.0) || amplitude >= base_price) {
        throw ConfigError("synthetic series: need 0 <= amplitude < base price");
    }
}

QuoteSeries generate_series(const SyntheticSpec& spec, std::string ticker) {
    spec.validate();

    QuoteSeries series;
    series.ticker = ticker.empty() ? std::string(to_string(spec.kind)) : std::move(ticker);
    series.timestamps = minute_grid(spec.length);
    series.prices.resize(spec.length);

    switch (spec.kind) {
        case SeriesKind::Sine: {
            const double w = 2.0 * std::numbers::pi / spec.period;
            for (std::size_t t = 0; t < spec.length; ++t) {
                series.prices[t] =
                    spec.base_price + spec.amplitude * std::sin(w * static_cast<double>(t));
            }
            break;
        }
        case SeriesKind::Gaussian: {
            std::mt19937_64 rng(spec.seed);
            double price = spec.base_price;
            series.prices[0] = price;
            for (std::size_t t = 1; t < spec.length; ++t) {
                price *= std::exp(spec.sigma * standard_normal(rng));
                series.prices[t] = price;
            }
            break;
        }
        case SeriesKind::Ar1: {
            std::mt19937_64 rng(spec.seed);
            double price = spec.base_price;
            double ret = 0.0;
            series.prices[0] = price;
            for (std::size_t t = 1; t < spec.length; ++t) {
                ret = spec.phi * ret + spec.sigma * standard_normal(rng);
                price *= std::exp(ret);
                series.prices[t] = price;
            }
            break;
        }
    }
    series.validate();
    return series;
}

}  // namespace signet
