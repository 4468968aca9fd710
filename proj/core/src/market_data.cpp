#include "signet/market_data.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <unordered_set>

#include "signet/errors.hpp"
#include "signet/text.hpp"

namespace signet {
namespace {

constexpr std::int64_t kMicrosPerSecond = 1'000'000;
constexpr std::int64_t kMicrosPerDay = 86'400 * kMicrosPerSecond;

// Howard Hinnant's civil-calendar round trips. Proleptic Gregorian, UTC.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const auto yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const auto doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp < 10 ? mp + 3 : mp - 9;
    y = yy + (m <= 2);
}

unsigned days_in_month(std::int64_t y, unsigned m) {
    static constexpr unsigned kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && (y % 4 == 0 && (y % 100 != 0 || y % 400 == 0))) return 29;
    return kDays[m - 1];
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (const char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::int64_t read_digits(std::string_view text, std::size_t pos, std::size_t len,
                         const char* what) {
    if (pos + len > text.size() || !all_digits(text.substr(pos, len))) {
        throw ParseError("bad timestamp '" + std::string(text) + "': expected " +
                         std::string(what));
    }
    std::int64_t v = 0;
    for (std::size_t i = 0; i < len; ++i) v = v * 10 + (text[pos + i] - '0');
    return v;
}

}  // namespace

Timestamp Timestamp::parse(std::string_view text) {
    auto fail = [&](const char* why) -> void {
        throw ParseError("bad timestamp '" + std::string(text) + "': " + why);
    };

    if (text.size() < 19) fail("too short");
    if (text[4] != '-' || text[7] != '-') fail("expected YYYY-MM-DD");
    if (text[10] != 'T' && text[10] != ' ') fail("expected 'T' or ' ' separator");
    if (text[13] != ':' || text[16] != ':') fail("expected HH:MM:SS");

    const std::int64_t year = read_digits(text, 0, 4, "year");
    const auto month = static_cast<unsigned>(read_digits(text, 5, 2, "month"));
    const auto day = static_cast<unsigned>(read_digits(text, 8, 2, "day"));
    const std::int64_t hour = read_digits(text, 11, 2, "hour");
    const std::int64_t minute = read_digits(text, 14, 2, "minute");
    const std::int64_t second = read_digits(text, 17, 2, "second");

    if (month < 1 || month > 12) fail("month out of range");
    if (day < 1 || day > days_in_month(year, month)) fail("day out of range");
    if (hour > 23 || minute > 59 || second > 59) fail("time out of range");

    std::size_t pos = 19;
    std::int64_t micros_frac = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t digits = 0;
        while (pos + digits < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos + digits]))) {
            ++digits;
        }
        if (digits == 0) fail("empty fractional seconds");
        if (digits > 6) fail("fractional seconds beyond microseconds");
        micros_frac = read_digits(text, pos, digits, "fraction");
        for (std::size_t i = digits; i < 6; ++i) micros_frac *= 10;
        pos += digits;
    }

    std::int64_t offset_seconds = 0;
    if (pos < text.size()) {
        const char c = text[pos];
        if (c == 'Z') {
            ++pos;
        } else if (c == '+' || c == '-') {
            if (pos + 6 > text.size() || text[pos + 3] != ':') fail("bad UTC offset");
            const std::int64_t oh = read_digits(text, pos + 1, 2, "offset hour");
            const std::int64_t om = read_digits(text, pos + 4, 2, "offset minute");
            if (oh > 23 || om > 59) fail("offset out of range");
            offset_seconds = (oh * 3600 + om * 60) * (c == '+' ? 1 : -1);
            pos += 6;
        } else {
            fail("trailing characters");
        }
    }
    if (pos != text.size()) fail("trailing characters");

    const std::int64_t days = days_from_civil(year, month, day);
    const std::int64_t seconds =
        days * 86'400 + hour * 3600 + minute * 60 + second - offset_seconds;
    return Timestamp{seconds * kMicrosPerSecond + micros_frac};
}

std::string Timestamp::to_string() const {
    std::int64_t days = micros / kMicrosPerDay;
    std::int64_t rem = micros % kMicrosPerDay;
    if (rem < 0) {
        rem += kMicrosPerDay;
        --days;
    }

    std::int64_t year = 0;
    unsigned month = 0, day = 0;
    civil_from_days(days, year, month, day);

    const std::int64_t second_of_day = rem / kMicrosPerSecond;
    const std::int64_t frac = rem % kMicrosPerSecond;

    char buf[40];
    int n = std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lld",
                          static_cast<long long>(year), month, day,
                          static_cast<long long>(second_of_day / 3600),
                          static_cast<long long>(second_of_day / 60 % 60),
                          static_cast<long long>(second_of_day % 60));
    if (frac != 0) {
        n += std::snprintf(buf + n, sizeof buf - n, ".%06lld",
                           static_cast<long long>(frac));
    }
    buf[n++] = 'Z';
    return std::string(buf, static_cast<std::size_t>(n));
}

void QuoteSeries::validate() const {
    if (timestamps.size() != prices.size()) {
        throw ValidationError("quote series '" + ticker +
                              "': timestamp/price count mismatch");
    }
    for (std::size_t i = 0; i < prices.size(); ++i) {
        if (!std::isfinite(prices[i]) || prices[i] <= 0.0) {
            throw ValidationError("quote series '" + ticker + "': non-positive price at record " +
                                  std::to_string(i + 1));
        }
        if (i > 0 && !(timestamps[i - 1] < timestamps[i])) {
            throw ValidationError("quote series '" + ticker + "': timestamps not strictly increasing at record " +
                                  std::to_string(i + 1));
        }
    }
}

std::string_view to_label(PercentileGroup g) {
    switch (g) {
        case PercentileGroup::P0_25: return "0-25";
        case PercentileGroup::P25_50: return "25-50";
        case PercentileGroup::P50_75: return "50-75";
        case PercentileGroup::P75_100: return "75-100";
    }
    return "?";
}

PercentileGroup parse_percentile(std::string_view s) {
    std::string norm;
    norm.reserve(s.size());
    // Tolerate the typographic en dash some sources use.
    for (std::size_t i = 0; i < s.size();) {
        if (i + 3 <= s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x80 &&
            static_cast<unsigned char>(s[i + 2]) == 0x93) {
            norm += '-';
            i += 3;
        } else {
            norm += s[i++];
        }
    }
    const std::string_view t = trim(norm);
    for (const auto g : kPercentileGroups) {
        if (t == to_label(g)) return g;
    }
    throw ParseError("unknown percentile label: '" + std::string(s) + "'");
}

QuoteSeries load_quotes(const std::filesystem::path& path, std::string ticker) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open quote file: " + path.string());

    QuoteSeries series;
    series.ticker = ticker.empty() ? path.stem().string() : std::move(ticker);

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split(trim(line), ',');
        if (fields.size() != 2) {
            throw ParseError(path.string(), lineno, "expected '<timestamp>,<price>', got " +
                                                        std::to_string(fields.size()) + " fields");
        }
        Timestamp ts;
        double price = 0.0;
        try {
            ts = Timestamp::parse(trim(fields[0]));
            price = parse_double(fields[1]);
        } catch (const ParseError& e) {
            throw ParseError(path.string(), lineno, e.what());
        }
        if (!std::isfinite(price) || price <= 0.0) {
            throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                                  ": non-positive price " + std::string(trim(fields[1])));
        }
        if (!series.timestamps.empty() && !(series.timestamps.back() < ts)) {
            throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                                  ": timestamps not strictly increasing");
        }
        series.timestamps.push_back(ts);
        series.prices.push_back(price);
    }
    return series;
}

void write_quotes(const QuoteSeries& series, const std::filesystem::path& path) {
    series.validate();
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << series.timestamps[i].to_string() << ',' << format_shortest(series.prices[i])
            << '\n';
    }
    if (!out) throw IoError("write failed: " + path.string());
}

std::vector<StockMeta> load_metadata(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open metadata file: " + path.string());

    static constexpr std::string_view kHeader = "ticker,sector,market_cap_kusd,percentile";
    std::string line;
    if (!std::getline(in, line) || trim(line) != kHeader) {
        throw ValidationError(path.string() + ": schema mismatch, expected header '" +
                              std::string(kHeader) + "'");
    }

    std::vector<StockMeta> out;
    std::unordered_set<std::string> seen;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split(trim(line), ',');
        if (fields.size() != 4) {
            throw ParseError(path.string(), lineno, "expected 4 fields, got " +
                                                        std::to_string(fields.size()));
        }
        StockMeta meta;
        meta.ticker = std::string(trim(fields[0]));
        meta.sector = std::string(trim(fields[1]));
        try {
            meta.market_cap_kusd = parse_double(fields[2]);
            meta.group = parse_percentile(fields[3]);
        } catch (const ParseError& e) {
            throw ParseError(path.string(), lineno, e.what());
        }
        if (meta.ticker.empty()) {
            throw ValidationError(path.string() + ":" + std::to_string(lineno) + ": empty ticker");
        }
        if (!std::isfinite(meta.market_cap_kusd) || meta.market_cap_kusd <= 0.0) {
            throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                                  ": market cap must be positive");
        }
        if (!seen.insert(meta.ticker).second) {
            throw ValidationError(path.string() + ":" + std::to_string(lineno) +
                                  ": duplicate ticker '" + meta.ticker + "'");
        }
        out.push_back(std::move(meta));
    }
    return out;
}

}  // namespace signet
