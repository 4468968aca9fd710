#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "signet/errors.hpp"
#include "signet/metrics.hpp"
#include "signet/rng.hpp"
#include "signet/trading.hpp"

using namespace signet;

TEST_CASE("positions follow the threshold band") {
    SUBCASE("both predictions outside the band") {
        const std::vector<double> preds{0.02, -0.02};
        CHECK(positions(preds, ThresholdRule{0.01}, 1) == std::vector<int>{1, -1});
    }
    SUBCASE("inside the band the prior position is kept") {
        const std::vector<double> preds{0.005, 0.003};
        CHECK(positions(preds, ThresholdRule{0.01}, 1) == std::vector<int>{1, 1});
        CHECK(positions(preds, ThresholdRule{0.01}, -1) == std::vector<int>{-1, -1});
    }
    SUBCASE("hand-traced hold sequence") {
        const std::vector<double> preds{0.02, 0.0, -0.02, 0.0};
        CHECK(positions(preds, ThresholdRule{0.01}, -1) ==
              std::vector<int>{1, 1, -1, -1});
    }
    SUBCASE("boundary values stay inside the band") {
        // The rule is strict: pred == X holds the prior position.
        const std::vector<double> preds{0.01, -0.01};
        CHECK(positions(preds, ThresholdRule{0.01}, -1) == std::vector<int>{-1, -1});
    }
    SUBCASE("zero width follows signs, holding only at exact zeros") {
        const std::vector<double> preds{0.3, -0.1, 0.0, 0.2, 0.0};
        CHECK(positions(preds, ThresholdRule{0.0}, 1) ==
              std::vector<int>{1, -1, -1, 1, 1});
    }
    SUBCASE("invalid arguments") {
        CHECK_THROWS_AS(positions(std::vector<double>{0.1}, ThresholdRule{-0.1}, 1),
                        ValidationError);
        CHECK_THROWS_AS(positions(std::vector<double>{0.1}, ThresholdRule{0.1}, 0),
                        ValidationError);
    }
}

TEST_CASE("positions match an exhaustive simulation on random instances") {
    std::mt19937_64 rng(201);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 30;
        std::vector<double> preds(n);
        for (double& p : preds) {
            p = (rng() % 6 == 0) ? 0.0 : uniform_pm1(rng) * 0.03;
        }
        const double x = (rng() % 4 == 0) ? 0.0 : uniform_pm1(rng) * 0.01 + 0.01;
        const int initial = (rng() % 2 == 0) ? 1 : -1;

        const auto got = positions(preds, ThresholdRule{x}, initial);
        const auto want = oracle::band_positions(preds, x, initial);
        CHECK(got == want);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK((got[i] == 1 || got[i] == -1));
        }
    }
}

TEST_CASE("rule_return") {
    SUBCASE("all-long reduces to buy & hold") {
        const std::vector<double> targets{0.01, -0.02, 0.005, 0.004};
        const std::vector<int> longs(4, 1);
        CHECK(rule_return(longs, targets) == buy_hold_return(targets));
    }
    SUBCASE("sign-perfect positions attain the absolute sum") {
        const std::vector<double> targets{0.01, -0.02, 0.005, -0.004};
        std::vector<int> perfect;
        for (const double y : targets) perfect.push_back(y > 0 ? 1 : -1);
        CHECK(rule_return(perfect, targets) == max_return(targets));
    }
    SUBCASE("random instances match a dot-product oracle") {
        std::mt19937_64 rng(202);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<int> pos(10);
            std::vector<double> targets(10);
            for (std::size_t i = 0; i < 10; ++i) {
                pos[i] = (rng() % 2 == 0) ? 1 : -1;
                targets[i] = uniform_pm1(rng) * 0.02;
            }
            CHECK(std::abs(rule_return(pos, targets) -
                           oracle::position_return(pos, targets)) < 1e-12);
        }
    }
    SUBCASE("linear in the targets") {
        std::mt19937_64 rng(203);
        std::vector<int> pos(12);
        std::vector<double> targets(12), scaled(12);
        const double alpha = -2.75;
        for (std::size_t i = 0; i < 12; ++i) {
            pos[i] = (rng() % 2 == 0) ? 1 : -1;
            targets[i] = uniform_pm1(rng) * 0.02;
            scaled[i] = alpha * targets[i];
        }
        CHECK(std::abs(rule_return(pos, scaled) - alpha * rule_return(pos, targets)) <
              1e-12);
    }
    SUBCASE("length mismatch is a structural error") {
        CHECK_THROWS_AS(rule_return(std::vector<int>{1}, std::vector<double>{0.1, 0.2}),
                        ValidationError);
    }
}

TEST_CASE("threshold_grid spans 0..max inclusive") {
    const auto grid = threshold_grid(0.02, 0.0005);
    REQUIRE(grid.size() == 41);
    CHECK(grid.front() == 0.0);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        CHECK(grid[k] == static_cast<double>(k) * 0.0005);
    }
    CHECK_THROWS_AS(threshold_grid(0.02, 0.0), ConfigError);
    CHECK_THROWS_AS(threshold_grid(-0.01, 0.0005), ConfigError);
    CHECK(threshold_grid(0.0, 0.0005) == std::vector<double>{0.0});
}

namespace {

std::vector<Sample> random_train(std::mt19937_64& rng, std::size_t n) {
    std::vector<Sample> train(n);
    for (Sample& s : train) {
        for (double& v : s.x) v = uniform_pm1(rng) * 0.05;
        s.y = uniform_pm1(rng) * 0.02;
    }
    return train;
}

// Exhaustive grid evaluation through the oracle-side band simulation.
double oracle_score(const NetParams& p, std::span<const Sample> train, double x,
                    int initial) {
    std::vector<double> preds, targets;
    for (const Sample& s : train) {
        preds.push_back(forward(p, s.x));
        targets.push_back(s.y);
    }
    return oracle::position_return(oracle::band_positions(preds, x, initial), targets);
}

}  // namespace

TEST_CASE("optimize_range picks the grid argmax with smallest-X ties") {
    std::mt19937_64 rng(204);

    SUBCASE("singleton grid") {
        const auto train = random_train(rng, 10);
        std::mt19937_64 prng(1);
        const NetParams p = init_params(prng);
        CHECK(optimize_range(p, train, std::vector<double>{0.0}, 1).half_width == 0.0);
    }
    SUBCASE("empty grid or empty training set") {
        const auto train = random_train(rng, 5);
        CHECK_THROWS_AS(optimize_range(NetParams{}, train, std::vector<double>{}, 1),
                        ConfigError);
        CHECK_THROWS_AS(
            optimize_range(NetParams{}, std::vector<Sample>{}, std::vector<double>{0.0}, 1),
            ValidationError);
    }
    SUBCASE("random instances agree with exhaustive evaluation") {
        const auto grid = threshold_grid(0.02, 0.0005);
        for (int trial = 0; trial < 100; ++trial) {
            std::mt19937_64 prng(trial + 1);
            const NetParams p = init_params(prng);
            const auto train = random_train(rng, 20);
            const int initial = (trial % 2 == 0) ? 1 : -1;

            const double chosen = optimize_range(p, train, grid, initial).half_width;

            double best_score = -1e300;
            double best_x = 0.0;
            for (const double x : grid) {
                const double score = oracle_score(p, train, x, initial);
                if (score > best_score || (score == best_score && x < best_x)) {
                    best_score = score;
                    best_x = x;
                }
            }
            CHECK(chosen == best_x);
            // And the chosen threshold's score dominates every grid point.
            const double chosen_score = oracle_score(p, train, chosen, initial);
            for (const double x : grid) {
                CHECK(chosen_score >= oracle_score(p, train, x, initial) - 1e-12);
            }
        }
    }
}
