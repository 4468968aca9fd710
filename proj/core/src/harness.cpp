#include "signet/harness.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "signet/errors.hpp"
#include "signet/trading.hpp"

namespace signet {

RunMetrics evaluate_run(const Dataset& ds, const ExperimentConfig& cfg,
                        std::uint64_t seed) {
    const auto train_half = ds.train();
    const auto test_half = ds.test();
    if (train_half.empty() || test_half.empty()) {
        throw ValidationError("dataset '" + ds.ticker + "': empty train or test half");
    }

    const NetParams params = train(train_half, cfg.rprop, seed);

    const std::vector<double> grid = threshold_grid(cfg.grid_max, cfg.grid_step);
    const ThresholdRule rule =
        optimize_range(params, train_half, grid, cfg.initial_position);

    const std::vector<double> train_preds = predict_all(params, train_half);
    const std::vector<double> test_preds = predict_all(params, test_half);
    const std::vector<double> train_targets = targets_of(train_half);
    const std::vector<double> test_targets = targets_of(test_half);

    RunMetrics m;
    m.threshold = rule.half_width;
    m.bh_train = buy_hold_return(train_targets);
    m.bh_test = buy_hold_return(test_targets);
    m.return_rule_train =
        rule_return(positions(train_preds, rule, cfg.initial_position), train_targets);
    m.sign_prediction = sign_prediction_ratio(test_preds, test_targets);
    m.total_return_rule =
        rule_return(positions(test_preds, rule, cfg.initial_position), test_targets);
    m.total_return_rawsign = total_return_rawsign(test_preds, test_targets);
    m.max_return = max_return(test_targets);
    m.ideal_profit_ratio = ideal_profit_ratio(m.total_return_rule, m.max_return);
    return m;
}

StockReport run_stock(const QuoteSeries& quotes, const StockMeta& meta,
                      const ExperimentConfig& cfg) {
    const Dataset ds = build_dataset(compute_returns(quotes), quotes.ticker);
    StockReport report;
    report.meta = meta;
    report.seeds.reserve(cfg.runs);
    report.runs.reserve(cfg.runs);
    for (int r = 0; r < cfg.runs; ++r) {
        const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(r);
        report.seeds.push_back(seed);
        report.runs.push_back(evaluate_run(ds, cfg, seed));
    }
    return report;
}

std::vector<StockReport> run_universe(const ExperimentConfig& cfg) {
    cfg.validate();

    const std::vector<StockMeta> metas = load_metadata(cfg.metadata);
    if (metas.empty()) throw ConfigError("metadata lists no stocks: " + cfg.metadata.string());

    // Fail on any missing quote file before a single run starts.
    std::vector<std::filesystem::path> paths;
    paths.reserve(metas.size());
    for (const StockMeta& m : metas) {
        auto p = cfg.quotes_dir / (m.ticker + ".csv");
        if (!std::filesystem::exists(p)) {
            throw ConfigError("missing quote file for ticker '" + m.ticker + "': " + p.string());
        }
        paths.push_back(std::move(p));
    }

    std::vector<Dataset> datasets;
    datasets.reserve(metas.size());
    for (std::size_t i = 0; i < metas.size(); ++i) {
        datasets.push_back(
            build_dataset(compute_returns(load_quotes(paths[i], metas[i].ticker)),
                          metas[i].ticker));
    }

    std::vector<StockReport> reports(metas.size());
    for (std::size_t s = 0; s < metas.size(); ++s) {
        reports[s].meta = metas[s];
        reports[s].seeds.resize(cfg.runs);
        reports[s].runs.resize(cfg.runs);
    }

    struct Job {
        std::size_t stock;
        int run;
    };
    std::vector<Job> jobs;
    jobs.reserve(metas.size() * static_cast<std::size_t>(cfg.runs));
    for (std::size_t s = 0; s < metas.size(); ++s) {
        for (int r = 0; r < cfg.runs; ++r) jobs.push_back({s, r});
    }

    // Jobs write into (stock, run) slots, so the result is independent of the
    // pool size and of scheduling order.
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= jobs.size()) return;
            const auto [s, r] = jobs[i];
            try {
                const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(r);
                reports[s].seeds[static_cast<std::size_t>(r)] = seed;
                reports[s].runs[static_cast<std::size_t>(r)] =
                    evaluate_run(datasets[s], cfg, seed);
            } catch (...) {
                const std::scoped_lock lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::size_t pool = cfg.threads > 0 ? static_cast<std::size_t>(cfg.threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
    pool = std::min(pool, jobs.size());
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(pool);
        for (std::size_t t = 0; t < pool; ++t) threads.emplace_back(worker);
    }

    if (first_error) std::rethrow_exception(first_error);
    return reports;
}

}  // namespace signet
