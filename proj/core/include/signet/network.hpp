#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <random>
#include <span>

#include "signet/dataset.hpp"

namespace signet {

// Hidden activation, range (0, 1).
inline double hidden_act(double n) {
    return 1.0 / (1.0 + std::exp(-n));
}

// Output activation, range (-1, 1) so the forecast can carry a sign.
inline double output_act(double n) {
    return 2.0 / (1.0 + std::exp(-2.0 * n)) - 1.0;
}

// Fixed 10-6-1 fully connected feedforward net. All 73 weights live in one
// flat array in a canonical order so optimizer state can align index by
// index: hidden unit i (1-based) owns slots [(i-1)*11, i*11) laid out as
// [bias, w_1..w_10], followed by the output layer as [bias, a_1..a_6].
struct NetParams {
    static constexpr std::size_t kInputs = 10;
    static constexpr std::size_t kHidden = 6;
    static constexpr std::size_t kWeightCount = kHidden * (kInputs + 1) + kHidden + 1;

    std::array<double, kWeightCount> flat{};

    // unit in 1..6, input in 0..10 where 0 is the bias slot.
    static constexpr std::size_t hidden_index(std::size_t unit, std::size_t input) {
        return (unit - 1) * (kInputs + 1) + input;
    }
    // i in 0..6 where 0 is the output bias.
    static constexpr std::size_t output_index(std::size_t i) {
        return kHidden * (kInputs + 1) + i;
    }

    double hidden(std::size_t unit, std::size_t input) const {
        return flat[hidden_index(unit, input)];
    }
    double& hidden(std::size_t unit, std::size_t input) {
        return flat[hidden_index(unit, input)];
    }
    double output(std::size_t i) const { return flat[output_index(i)]; }
    double& output(std::size_t i) { return flat[output_index(i)]; }
};

// Same shape as NetParams; entries are dLoss/dweight.
struct Gradient {
    std::array<double, NetParams::kWeightCount> flat{};
};

// All 73 weights i.i.d. uniform on [-1, 1], drawn in canonical order.
NetParams init_params(std::mt19937_64& rng);

double forward(const NetParams& p, std::span<const double, NetParams::kInputs> x);

std::vector<double> predict_all(const NetParams& p, std::span<const Sample> samples);

// Mean squared error over the batch.
double loss(const NetParams& p, std::span<const Sample> samples);

// Exact analytic gradient of the MSE loss.
Gradient gradient(const NetParams& p, std::span<const Sample> samples);

// Snapshot format: 73 decimals in canonical order, one per line.
void save_params(const NetParams& p, const std::filesystem::path& path);
NetParams load_params(const std::filesystem::path& path);

}  // namespace signet
