#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace signet {

// Microseconds since the Unix epoch, UTC.
struct Timestamp {
    std::int64_t micros = 0;

    friend auto operator<=>(const Timestamp&, const Timestamp&) = default;

    // Accepts "YYYY-MM-DD[T ]HH:MM:SS[.ffffff][Z|+HH:MM|-HH:MM]"; offsets are
    // normalized to UTC.
    static Timestamp parse(std::string_view text);

    // Canonical form "YYYY-MM-DDTHH:MM:SS[.ffffff]Z"; parse(to_string()) is
    // the identity.
    std::string to_string() const;
};

// Ordered intraday price observations for one stock.
struct QuoteSeries {
    std::string ticker;
    std::vector<Timestamp> timestamps;
    std::vector<double> prices;

    std::size_t size() const { return prices.size(); }

    // Throws ValidationError unless lengths match, all prices are finite and
    // positive, and timestamps strictly increase.
    void validate() const;
};

enum class PercentileGroup { P0_25, P25_50, P50_75, P75_100 };

inline constexpr std::array<PercentileGroup, 4> kPercentileGroups = {
    PercentileGroup::P0_25, PercentileGroup::P25_50,
    PercentileGroup::P50_75, PercentileGroup::P75_100};

std::string_view to_label(PercentileGroup g);  // "0-25", "25-50", ...
PercentileGroup parse_percentile(std::string_view s);

struct StockMeta {
    std::string ticker;
    std::string sector;
    double market_cap_kusd = 0.0;  // thousand USD
    PercentileGroup group = PercentileGroup::P0_25;
};

// Headerless CSV, one "<timestamp>,<price>" record per line. The ticker
// defaults to the file stem. Records are checked for ordering, never
// re-sorted.
QuoteSeries load_quotes(const std::filesystem::path& path, std::string ticker = {});
void write_quotes(const QuoteSeries& series, const std::filesystem::path& path);

// CSV with header "ticker,sector,market_cap_kusd,percentile".
std::vector<StockMeta> load_metadata(const std::filesystem::path& path);

}  // namespace signet
