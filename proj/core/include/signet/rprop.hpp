#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "signet/network.hpp"

namespace signet {

struct RpropConfig {
    double initial_update = 0.01;
    double min_update = 1e-6;
    double max_update = 50.0;
    double increase_factor = 1.2;
    double decrease_factor = 0.5;
    int max_iterations = 3000;

    void validate() const;  // throws ConfigError
};

// Per-weight step sizes plus the previous gradient sign and the previous
// applied weight change (needed to backtrack on a sign flip).
struct RpropState {
    std::vector<double> step_sizes;
    std::vector<double> prev_grad;
    std::vector<double> prev_delta;

    static RpropState make(std::size_t n, const RpropConfig& cfg);
};

// One resilient-propagation update. Per weight, with s = prev_grad * grad:
//   s > 0: step <- min(step * increase, max); w -= sign(grad) * step
//   s < 0: step <- max(step * decrease, min); the previous change is undone
//          and prev_grad is recorded as 0, so the next iteration moves only
//          on fresh sign evidence
//   s = 0: w -= sign(grad) * step with the step unchanged (sign(0) = 0, so a
//          zero gradient moves nothing)
void rprop_step(std::span<double> weights, std::span<const double> grad,
                RpropState& state, const RpropConfig& cfg);

// Random init in [-1, 1] followed by exactly cfg.max_iterations full-batch
// gradient + rprop_step epochs. Deterministic for a given seed.
NetParams train(std::span<const Sample> train_samples, const RpropConfig& cfg,
                std::uint64_t seed);

}  // namespace signet
