#include "signet/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>

#include "signet/errors.hpp"
#include "signet/text.hpp"

namespace signet {
namespace {

constexpr int kTableDecimals = 5;

std::vector<double> column(std::span<const RunMetrics> runs,
                           double RunMetrics::* field) {
    std::vector<double> out;
    out.reserve(runs.size());
    for (const RunMetrics& m : runs) out.push_back(m.*field);
    return out;
}

int group_index(PercentileGroup g) {
    return static_cast<int>(g);  // 0-25 -> 0 ... 75-100 -> 3
}

// Group tables order tickers by ascending market cap, ties by ticker.
bool table_order(const StockReport* a, const StockReport* b) {
    if (a->meta.market_cap_kusd != b->meta.market_cap_kusd) {
        return a->meta.market_cap_kusd < b->meta.market_cap_kusd;
    }
    return a->meta.ticker < b->meta.ticker;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    return out;
}

void write_group_csv(const std::filesystem::path& path,
                     const std::vector<const StockReport*>& stocks,
                     const std::vector<StockAggregates>& aggs) {
    auto out = open_out(path);

    out << "metric";
    for (const StockReport* s : stocks) out << ',' << s->meta.ticker;
    out << '\n';

    auto row = [&](std::string_view label, auto&& cell) {
        out << label;
        for (std::size_t i = 0; i < stocks.size(); ++i) out << ',' << cell(aggs[i]);
        out << '\n';
    };
    auto fixed = [](double v) { return format_fixed(v, kTableDecimals); };

    row("Buy & Hold (train)", [&](const StockAggregates& a) { return fixed(a.bh_train.mean); });
    row("Return rule (train)",
        [&](const StockAggregates& a) { return fixed(a.return_rule_train.mean); });
    row("Std. Dev", [&](const StockAggregates& a) { return fixed(a.return_rule_train.stddev); });
    row("Buy & Hold (test)", [&](const StockAggregates& a) { return fixed(a.bh_test.mean); });
    row("Sign Prediction", [&](const StockAggregates& a) {
        return format_fixed(a.sign_prediction.mean * 100.0, 2) + "%";
    });
    row("Std. Dev", [&](const StockAggregates& a) { return fixed(a.sign_prediction.stddev); });
    row("Total Return", [&](const StockAggregates& a) { return fixed(a.total_return_rule.mean); });
    row("Std. Dev", [&](const StockAggregates& a) { return fixed(a.total_return_rule.stddev); });
    row("Ideal Profit Ratio",
        [&](const StockAggregates& a) { return fixed(a.ideal_profit_ratio.mean); });
    row("Std. Dev", [&](const StockAggregates& a) { return fixed(a.ideal_profit_ratio.stddev); });
    row("Sharpe Ratio", [&](const StockAggregates& a) {
        return a.sharpe ? fixed(*a.sharpe) : std::string("NA");
    });
    row("Range", [&](const StockAggregates& a) {
        return "+/-" + format_trimmed(a.threshold.mean, kTableDecimals);
    });
    row("Std. Dev", [&](const StockAggregates& a) { return fixed(a.threshold.stddev); });
    row("Total Return (raw sign)",
        [&](const StockAggregates& a) { return fixed(a.total_return_rawsign.mean); });
    row("Std. Dev", [&](const StockAggregates& a) { return fixed(a.total_return_rawsign.stddev); });
    row("Runs", [&](const StockAggregates& a) { return std::to_string(a.runs); });

    if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

StockAggregates aggregate_runs(std::span<const RunMetrics> runs) {
    if (runs.empty()) throw ValidationError("aggregate_runs: no runs");
    StockAggregates a;
    a.runs = static_cast<int>(runs.size());
    a.bh_train = aggregate(column(runs, &RunMetrics::bh_train));
    a.return_rule_train = aggregate(column(runs, &RunMetrics::return_rule_train));
    a.bh_test = aggregate(column(runs, &RunMetrics::bh_test));
    a.sign_prediction = aggregate(column(runs, &RunMetrics::sign_prediction));
    a.total_return_rule = aggregate(column(runs, &RunMetrics::total_return_rule));
    a.total_return_rawsign = aggregate(column(runs, &RunMetrics::total_return_rawsign));
    a.max_return = aggregate(column(runs, &RunMetrics::max_return));
    a.ideal_profit_ratio = aggregate(column(runs, &RunMetrics::ideal_profit_ratio));
    a.threshold = aggregate(column(runs, &RunMetrics::threshold));
    if (runs.size() >= 2) {
        a.sharpe = sharpe_ratio(column(runs, &RunMetrics::total_return_rule));
    }
    return a;
}

void emit_report(const std::vector<StockReport>& reports,
                 const std::filesystem::path& out_dir) {
    if (reports.empty()) throw ValidationError("emit_report: no reports");
    for (const StockReport& r : reports) {
        if (r.runs.empty() || r.runs.size() != r.seeds.size()) {
            throw ValidationError("emit_report: malformed report for '" + r.meta.ticker + "'");
        }
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + out_dir.string());

    // runs.csv, full precision, ordered by (ticker, run).
    {
        std::vector<const StockReport*> order;
        for (const StockReport& r : reports) order.push_back(&r);
        std::sort(order.begin(), order.end(), [](const StockReport* a, const StockReport* b) {
            return a->meta.ticker < b->meta.ticker;
        });

        auto out = open_out(out_dir / "runs.csv");
        out << "ticker,group,market_cap_kusd,run,seed,threshold,bh_train,"
               "return_rule_train,bh_test,sign_prediction,total_return_rule,"
               "total_return_rawsign,max_return,ideal_profit_ratio\n";
        for (const StockReport* r : order) {
            for (std::size_t i = 0; i < r->runs.size(); ++i) {
                const RunMetrics& m = r->runs[i];
                out << r->meta.ticker << ',' << to_label(r->meta.group) << ','
                    << format_shortest(r->meta.market_cap_kusd) << ',' << i << ','
                    << r->seeds[i] << ',' << format_shortest(m.threshold) << ','
                    << format_shortest(m.bh_train) << ','
                    << format_shortest(m.return_rule_train) << ','
                    << format_shortest(m.bh_test) << ','
                    << format_shortest(m.sign_prediction) << ','
                    << format_shortest(m.total_return_rule) << ','
                    << format_shortest(m.total_return_rawsign) << ','
                    << format_shortest(m.max_return) << ','
                    << format_shortest(m.ideal_profit_ratio) << '\n';
            }
        }
        if (!out) throw IoError("write failed: " + (out_dir / "runs.csv").string());
    }

    // One table per nonempty group, tickers by ascending cap.
    std::array<std::vector<const StockReport*>, 4> groups;
    for (const StockReport& r : reports) {
        groups[static_cast<std::size_t>(group_index(r.meta.group))].push_back(&r);
    }
    std::map<const StockReport*, StockAggregates> agg_cache;
    for (const StockReport& r : reports) agg_cache[&r] = aggregate_runs(r.runs);

    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty()) continue;
        std::sort(groups[g].begin(), groups[g].end(), table_order);
        std::vector<StockAggregates> aggs;
        for (const StockReport* s : groups[g]) aggs.push_back(agg_cache.at(s));
        write_group_csv(out_dir / ("group_" + std::to_string(g + 1) + ".csv"), groups[g],
                        aggs);
    }

    // Scatter: one row per stock, then one MEAN row per nonempty group.
    {
        auto out = open_out(out_dir / "scatter.csv");
        out << "ticker,ln_market_cap,mean_sign_prediction,group\n";
        for (const auto& group : groups) {
            for (const StockReport* s : group) {
                out << s->meta.ticker << ','
                    << format_shortest(std::log(s->meta.market_cap_kusd)) << ','
                    << format_shortest(agg_cache.at(s).sign_prediction.mean) << ','
                    << to_label(s->meta.group) << '\n';
            }
        }
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (groups[g].empty()) continue;
            double ln_cap = 0.0;
            double spr = 0.0;
            for (const StockReport* s : groups[g]) {
                ln_cap += std::log(s->meta.market_cap_kusd);
                spr += agg_cache.at(s).sign_prediction.mean;
            }
            const auto n = static_cast<double>(groups[g].size());
            out << "MEAN," << format_shortest(ln_cap / n) << ',' << format_shortest(spr / n)
                << ',' << to_label(groups[g].front()->meta.group) << '\n';
        }
        if (!out) throw IoError("write failed: " + (out_dir / "scatter.csv").string());
    }
}

std::vector<StockReport> load_runs_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open runs file: " + path.string());

    static constexpr std::string_view kHeader =
        "ticker,group,market_cap_kusd,run,seed,threshold,bh_train,"
        "return_rule_train,bh_test,sign_prediction,total_return_rule,"
        "total_return_rawsign,max_return,ideal_profit_ratio";

    std::string line;
    if (!std::getline(in, line) || trim(line) != kHeader) {
        throw ValidationError(path.string() + ": unexpected runs.csv header");
    }

    struct Row {
        std::size_t run;
        std::uint64_t seed;
        RunMetrics m;
    };
    struct Partial {
        StockMeta meta;
        std::vector<Row> rows;
    };
    std::map<std::string, Partial> by_ticker;

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto f = split(trim(line), ',');
        if (f.size() != 14) {
            throw ParseError(path.string(), lineno, "expected 14 fields, got " +
                                                        std::to_string(f.size()));
        }
        try {
            StockMeta meta;
            meta.ticker = std::string(trim(f[0]));
            meta.group = parse_percentile(f[1]);
            meta.market_cap_kusd = parse_double(f[2]);

            Row row;
            row.run = static_cast<std::size_t>(parse_int(f[3]));
            row.seed = static_cast<std::uint64_t>(parse_int(f[4]));
            row.m.threshold = parse_double(f[5]);
            row.m.bh_train = parse_double(f[6]);
            row.m.return_rule_train = parse_double(f[7]);
            row.m.bh_test = parse_double(f[8]);
            row.m.sign_prediction = parse_double(f[9]);
            row.m.total_return_rule = parse_double(f[10]);
            row.m.total_return_rawsign = parse_double(f[11]);
            row.m.max_return = parse_double(f[12]);
            row.m.ideal_profit_ratio = parse_double(f[13]);

            auto [it, inserted] = by_ticker.try_emplace(meta.ticker);
            if (inserted) {
                it->second.meta = meta;
            } else if (it->second.meta.group != meta.group ||
                       it->second.meta.market_cap_kusd != meta.market_cap_kusd) {
                throw ValidationError("inconsistent metadata for ticker '" + meta.ticker + "'");
            }
            it->second.rows.push_back(row);
        } catch (const ParseError& e) {
            throw ParseError(path.string(), lineno, e.what());
        }
    }

    std::vector<StockReport> reports;
    reports.reserve(by_ticker.size());
    for (auto& [ticker, partial] : by_ticker) {
        std::sort(partial.rows.begin(), partial.rows.end(),
                  [](const Row& a, const Row& b) { return a.run < b.run; });
        for (std::size_t i = 0; i < partial.rows.size(); ++i) {
            if (partial.rows[i].run != i) {
                throw ValidationError(path.string() + ": ticker '" + ticker +
                                      "' has missing or duplicate run indices");
            }
        }
        StockReport r;
        r.meta = partial.meta;
        for (const Row& row : partial.rows) {
            r.seeds.push_back(row.seed);
            r.runs.push_back(row.m);
        }
        reports.push_back(std::move(r));
    }
    if (reports.empty()) throw ValidationError(path.string() + ": no data rows");
    return reports;
}

}  // namespace signet
