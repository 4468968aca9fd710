#include "signet/rprop.hpp"

#include <algorithm>

#include "signet/errors.hpp"
#include "signet/metrics.hpp"

namespace signet {

void RpropConfig::validate() const {
    if (!(initial_update > 0.0) || !(min_update > 0.0) || !(max_update > 0.0)) {
        throw ConfigError("rprop: update values must be positive");
    }
    if (!(min_update <= initial_update && initial_update <= max_update)) {
        throw ConfigError("rprop: need min_update <= initial_update <= max_update");
    }
    if (!(decrease_factor > 0.0 && decrease_factor < 1.0 && increase_factor > 1.0)) {
        throw ConfigError("rprop: need 0 < decrease_factor < 1 < increase_factor");
    }
    if (max_iterations < 0) {
        throw ConfigError("rprop: max_iterations must be non-negative");
    }
}

RpropState RpropState::make(std::size_t n, const RpropConfig& cfg) {
    RpropState st;
    st.step_sizes.assign(n, cfg.initial_update);
    st.prev_grad.assign(n, 0.0);
    st.prev_delta.assign(n, 0.0);
    return st;
}

void rprop_step(std::span<double> weights, std::span<const double> grad,
                RpropState& state, const RpropConfig& cfg) {
    const std::size_t n = weights.size();
    if (grad.size() != n || state.step_sizes.size() != n ||
        state.prev_grad.size() != n || state.prev_delta.size() != n) {
        throw ValidationError("rprop_step: weight/gradient/state shape mismatch");
    }

    for (std::size_t i = 0; i < n; ++i) {
        const double g = grad[i];
        const double s = state.prev_grad[i] * g;
        double& step = state.step_sizes[i];

        if (s > 0.0) {
            step = std::min(step * cfg.increase_factor, cfg.max_update);
            const double delta = -sign_of(g) * step;
            weights[i] += delta;
            state.prev_grad[i] = g;
            state.prev_delta[i] = delta;
        } else if (s < 0.0) {
            // Overshot a minimum: shrink the step, undo the last change, and
            // forget the gradient so the next iteration moves afresh.
            step = std::max(step * cfg.decrease_factor, cfg.min_update);
            weights[i] -= state.prev_delta[i];
            state.prev_grad[i] = 0.0;
            state.prev_delta[i] = 0.0;
        } else {
            const double delta = -sign_of(g) * step;
            weights[i] += delta;
            state.prev_grad[i] = g;
            state.prev_delta[i] = delta;
        }
    }
}

NetParams train(std::span<const Sample> train_samples, const RpropConfig& cfg,
                std::uint64_t seed) {
    cfg.validate();
    if (train_samples.empty()) throw ValidationError("train: empty training set");

    std::mt19937_64 rng(seed);
    NetParams params = init_params(rng);
    RpropState state = RpropState::make(NetParams::kWeightCount, cfg);

    for (int it = 0; it < cfg.max_iterations; ++it) {
        const Gradient g = gradient(params, train_samples);
        rprop_step(params.flat, g.flat, state, cfg);
    }
    return params;
}

}  // namespace signet
