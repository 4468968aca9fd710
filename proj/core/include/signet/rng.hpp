#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace signet {

// Draws below use explicit bit-to-double mappings instead of the standard
// distributions, whose output is implementation-defined. mt19937_64 itself is
// fully specified, so a seed produces the same stream on every platform.

// Uniform on [-1, 1).
inline double uniform_pm1(std::mt19937_64& rng) {
    const auto bits = static_cast<double>(rng() >> 11);  // top 53 bits
    return bits * (2.0 / 9007199254740992.0) - 1.0;
}

// Uniform on (0, 1).
inline double uniform_open01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

// Standard normal via Box-Muller.
inline double standard_normal(std::mt19937_64& rng) {
    const double u1 = uniform_open01(rng);
    const double u2 = uniform_open01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace signet
