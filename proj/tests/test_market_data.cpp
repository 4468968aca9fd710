#include <charconv>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "signet/errors.hpp"
#include "signet/market_data.hpp"
#include "signet/text.hpp"
#include "test_util.hpp"

using namespace signet;
using testutil::TempDir;
using testutil::write_file;

TEST_CASE("timestamp parses ISO-8601 variants to the same instant") {
    const auto base = Timestamp::parse("2015-09-16T14:00:00");
    CHECK(Timestamp::parse("2015-09-16 14:00:00") == base);
    CHECK(Timestamp::parse("2015-09-16T14:00:00Z") == base);
    CHECK(Timestamp::parse("2015-09-16T17:00:00+03:00") == base);
    CHECK(Timestamp::parse("2015-09-16T11:30:00-02:30") == base);
    CHECK(Timestamp::parse("2015-09-16T14:00:00.250").micros == base.micros + 250'000);
    CHECK(Timestamp::parse("2015-09-16T14:00:00.000001").micros == base.micros + 1);
}

TEST_CASE("timestamp rejects malformed text") {
    CHECK_THROWS_AS(Timestamp::parse("2015-09-16"), ParseError);
    CHECK_THROWS_AS(Timestamp::parse("2015-13-01T00:00:00"), ParseError);
    CHECK_THROWS_AS(Timestamp::parse("2015-02-29T00:00:00"), ParseError);
    CHECK_THROWS_AS(Timestamp::parse("2015-09-16T24:00:00"), ParseError);
    CHECK_THROWS_AS(Timestamp::parse("2015-09-16T14:00:00.1234567"), ParseError);
    CHECK_THROWS_AS(Timestamp::parse("2015-09-16T14:00:00junk"), ParseError);
    CHECK_THROWS_AS(Timestamp::parse("not a time"), ParseError);
}

TEST_CASE("timestamp formatting round-trips random instants") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        // A century around the epoch, microsecond resolution.
        const auto micros = static_cast<std::int64_t>(rng() % 3'155'760'000'000'000ULL) -
                            1'000'000'000'000'000;
        const Timestamp t{micros};
        CHECK(Timestamp::parse(t.to_string()) == t);
    }
    CHECK(Timestamp{0}.to_string() == "1970-01-01T00:00:00Z");
}

TEST_CASE("load_quotes echoes records in order") {
    TempDir tmp("quotes");
    write_file(tmp / "AB.csv", "2020-01-02T10:00:00Z,100.0\n2020-01-02T10:01:00Z,101.0\n");
    const auto series = load_quotes(tmp / "AB.csv");
    REQUIRE(series.size() == 2);
    CHECK(series.ticker == "AB");
    CHECK(series.prices[0] == 100.0);
    CHECK(series.prices[1] == 101.0);
    CHECK(series.timestamps[0] < series.timestamps[1]);
}

TEST_CASE("load_quotes keeps decimal prices bit-exact") {
    TempDir tmp("quotes");
    const std::string fields[] = {"0.1", "123.456789012345", "1e-3", "2.5000"};
    std::string content;
    for (int i = 0; i < 4; ++i) {
        content += "2020-01-02T10:0" + std::to_string(i) + ":00Z," + fields[i] + "\n";
    }
    write_file(tmp / "X.csv", content);
    const auto series = load_quotes(tmp / "X.csv");
    REQUIRE(series.size() == 4);
    for (int i = 0; i < 4; ++i) {
        double expected = 0.0;
        std::from_chars(fields[i].data(), fields[i].data() + fields[i].size(), expected);
        CHECK(series.prices[i] == expected);
    }
}

TEST_CASE("load_quotes of 1000 rows yields a 1000-quote series") {
    TempDir tmp("quotes");
    QuoteSeries series;
    series.ticker = "BIG";
    for (int i = 0; i < 1000; ++i) {
        series.timestamps.push_back(Timestamp{static_cast<std::int64_t>(i) * 60'000'000});
        series.prices.push_back(100.0 + 0.01 * i);
    }
    write_quotes(series, tmp / "BIG.csv");
    CHECK(load_quotes(tmp / "BIG.csv").size() == 1000);
}

TEST_CASE("load_quotes error taxonomy") {
    TempDir tmp("quotes");

    SUBCASE("negative price is a validation error") {
        write_file(tmp / "bad.csv", "2020-01-02T10:00:00Z,-5.0\n");
        CHECK_THROWS_AS(load_quotes(tmp / "bad.csv"), ValidationError);
    }
    SUBCASE("zero price is a validation error") {
        write_file(tmp / "bad.csv", "2020-01-02T10:00:00Z,0\n");
        CHECK_THROWS_AS(load_quotes(tmp / "bad.csv"), ValidationError);
    }
    SUBCASE("malformed record reports its line number") {
        write_file(tmp / "bad.csv",
                   "2020-01-02T10:00:00Z,100\n2020-01-02T10:01:00Z,oops\n");
        try {
            load_quotes(tmp / "bad.csv");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(":2") != std::string::npos);
        }
    }
    SUBCASE("wrong field count is a parse error") {
        write_file(tmp / "bad.csv", "2020-01-02T10:00:00Z,100,extra\n");
        CHECK_THROWS_AS(load_quotes(tmp / "bad.csv"), ParseError);
    }
    SUBCASE("non-increasing timestamps are an ordering error") {
        write_file(tmp / "bad.csv",
                   "2020-01-02T10:01:00Z,100\n2020-01-02T10:00:00Z,101\n");
        CHECK_THROWS_AS(load_quotes(tmp / "bad.csv"), ValidationError);
    }
    SUBCASE("equal timestamps are rejected too") {
        write_file(tmp / "bad.csv",
                   "2020-01-02T10:00:00Z,100\n2020-01-02T10:00:00Z,101\n");
        CHECK_THROWS_AS(load_quotes(tmp / "bad.csv"), ValidationError);
    }
    SUBCASE("missing file is an I/O error") {
        CHECK_THROWS_AS(load_quotes(tmp / "nope.csv"), IoError);
    }
}

TEST_CASE("write_quotes then load_quotes is the identity") {
    TempDir tmp("roundtrip");
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 30; ++iter) {
        QuoteSeries series;
        series.ticker = "RT";
        std::int64_t t = static_cast<std::int64_t>(rng() % 1'000'000) * 1'000'000;
        const std::size_t n = 2 + rng() % 40;
        for (std::size_t i = 0; i < n; ++i) {
            t += 1 + static_cast<std::int64_t>(rng() % 10'000'000);  // irregular spacing
            series.timestamps.push_back(Timestamp{t});
            // Prices with awkward mantissas.
            const double p = std::exp((static_cast<double>(rng() % 1'000'000) / 1e6 - 0.5));
            series.prices.push_back(p * 100.0 + 1e-7);
        }
        write_quotes(series, tmp / "rt.csv");
        const auto loaded = load_quotes(tmp / "rt.csv", "RT");
        REQUIRE(loaded.size() == series.size());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(loaded.timestamps[i] == series.timestamps[i]);
            CHECK(loaded.prices[i] == series.prices[i]);  // bit-exact
        }
    }
}

TEST_CASE("metadata loads the documented schema") {
    TempDir tmp("meta");
    write_file(tmp / "meta.csv",
               "ticker,sector,market_cap_kusd,percentile\n"
               "ABEV3,Consumer Staples,93084295,75-100\n"
               "USIM5,Materials,2164639,0-25\n");
    const auto metas = load_metadata(tmp / "meta.csv");
    REQUIRE(metas.size() == 2);
    CHECK(metas[0].ticker == "ABEV3");
    CHECK(metas[0].sector == "Consumer Staples");
    CHECK(metas[0].market_cap_kusd == 93084295.0);
    CHECK(metas[0].group == PercentileGroup::P75_100);
    CHECK(metas[1].ticker == "USIM5");
    CHECK(metas[1].group == PercentileGroup::P0_25);
}

TEST_CASE("metadata accepts the en-dash percentile spelling") {
    TempDir tmp("meta");
    write_file(tmp / "meta.csv",
               "ticker,sector,market_cap_kusd,percentile\n"
               "ABEV3,Consumer Staples,93084295,75\xE2\x80\x93"
               "100\n");
    CHECK(load_metadata(tmp / "meta.csv")[0].group == PercentileGroup::P75_100);
}

TEST_CASE("metadata edge cases and errors") {
    TempDir tmp("meta");

    SUBCASE("empty data section gives an empty list") {
        write_file(tmp / "meta.csv", "ticker,sector,market_cap_kusd,percentile\n");
        CHECK(load_metadata(tmp / "meta.csv").empty());
    }
    SUBCASE("wrong header is a schema error") {
        write_file(tmp / "meta.csv", "ticker,sector,cap,percentile\nA,B,1,0-25\n");
        CHECK_THROWS_AS(load_metadata(tmp / "meta.csv"), ValidationError);
    }
    SUBCASE("duplicate ticker is a validation error") {
        write_file(tmp / "meta.csv",
                   "ticker,sector,market_cap_kusd,percentile\n"
                   "A,S,1,0-25\nA,S,2,25-50\n");
        CHECK_THROWS_AS(load_metadata(tmp / "meta.csv"), ValidationError);
    }
    SUBCASE("unknown percentile label is rejected") {
        write_file(tmp / "meta.csv",
                   "ticker,sector,market_cap_kusd,percentile\nA,S,1,10-30\n");
        CHECK_THROWS_AS(load_metadata(tmp / "meta.csv"), ParseError);
    }
    SUBCASE("non-positive market cap is rejected") {
        write_file(tmp / "meta.csv",
                   "ticker,sector,market_cap_kusd,percentile\nA,S,-3,0-25\n");
        CHECK_THROWS_AS(load_metadata(tmp / "meta.csv"), ValidationError);
    }
}

TEST_CASE("percentile labels round-trip") {
    for (const auto g : kPercentileGroups) {
        CHECK(parse_percentile(to_label(g)) == g);
    }
}
