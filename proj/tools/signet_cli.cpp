#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "signet/config.hpp"
#include "signet/errors.hpp"
#include "signet/harness.hpp"
#include "signet/report.hpp"
#include "signet/synthetic.hpp"
#include "signet/text.hpp"

namespace {

int do_gen(const std::string& kind, std::size_t length, std::uint64_t seed, double sigma,
           double phi, const std::string& ticker, const std::string& out_file) {
    signet::SyntheticSpec spec;
    spec.kind = signet::parse_series_kind(kind);
    spec.length = length;
    spec.seed = seed;
    spec.sigma = sigma;
    spec.phi = phi;

    const signet::QuoteSeries series = signet::generate_series(spec, ticker);
    signet::write_quotes(series, out_file);
    std::cout << "wrote " << series.size() << " quotes (" << kind << ") to " << out_file
              << '\n';
    return 0;
}

int do_run(const signet::ExperimentConfig& cfg) {
    const auto reports = signet::run_universe(cfg);
    for (const auto& r : reports) {
        const auto agg = signet::aggregate_runs(r.runs);
        std::cout << r.meta.ticker << ": mean SPR "
                  << signet::format_fixed(agg.sign_prediction.mean * 100.0, 2)
                  << "%, mean rule return "
                  << signet::format_fixed(agg.total_return_rule.mean, 5) << " over "
                  << agg.runs << " runs\n";
    }
    signet::emit_report(reports, cfg.out_dir);
    std::cout << "wrote report files to " << cfg.out_dir.string() << '\n';
    return 0;
}

int do_report(const std::string& from, const std::string& out_dir) {
    const auto reports = signet::load_runs_csv(from);
    signet::emit_report(reports, out_dir);
    std::cout << "rebuilt report files in " << out_dir << " from " << from << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intraday return sign forecasting: dataset -> 10-6-1 net -> "
                 "threshold trading rule -> profitability report"};
    app.require_subcommand(1);

    // gen
    std::string gen_kind;
    std::size_t gen_length = 1000;
    std::uint64_t gen_seed = 1;
    double gen_sigma = 0.002;
    double gen_phi = 0.3;
    std::string gen_ticker;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a synthetic quote CSV");
    gen->add_option("--kind", gen_kind, "series kind: sine, ar1 or gaussian")
        ->required()
        ->check(CLI::IsMember({"sine", "ar1", "gaussian"}));
    gen->add_option("--length", gen_length, "number of quotes (default 1000)");
    gen->add_option("--out", gen_out, "output quote CSV path")->required();
    gen->add_option("--seed", gen_seed, "RNG seed for ar1/gaussian (default 1)");
    gen->add_option("--sigma", gen_sigma, "log-return innovation std dev (default 0.002)");
    gen->add_option("--phi", gen_phi, "AR(1) coefficient (default 0.3)");
    gen->add_option("--ticker", gen_ticker, "ticker stored in the series (default: kind)");

    // run
    std::string run_config;
    std::uint64_t run_seed = 0;
    int run_runs = 0;
    int run_threads = 0;
    std::string run_out;
    auto* run = app.add_subcommand("run", "run the full experiment from a config file");
    run->add_option("--config", run_config, "experiment config file")->required();
    auto* seed_opt = run->add_option("--seed", run_seed, "override base_seed");
    auto* runs_opt = run->add_option("--runs", run_runs, "override run count");
    auto* threads_opt = run->add_option("--threads", run_threads, "override worker count");
    auto* out_opt = run->add_option("--out", run_out, "override output directory");

    // report
    std::string report_from;
    std::string report_out;
    auto* report = app.add_subcommand("report", "rebuild report files from a runs.csv");
    report->add_option("--from", report_from, "runs.csv produced by `run`")->required();
    report->add_option("--out", report_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            return do_gen(gen_kind, gen_length, gen_seed, gen_sigma, gen_phi, gen_ticker,
                          gen_out);
        }
        if (run->parsed()) {
            signet::ExperimentConfig cfg = signet::load_config(run_config);
            if (*seed_opt) cfg.base_seed = run_seed;
            if (*runs_opt) cfg.runs = run_runs;
            if (*threads_opt) cfg.threads = run_threads;
            if (*out_opt) cfg.out_dir = run_out;
            return do_run(cfg);
        }
        return do_report(report_from, report_out);
    } catch (const signet::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const signet::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const signet::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
