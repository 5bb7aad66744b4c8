#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace tagdecay {

/**
 * @brief Deterministic random source for the simulator.
 *
 * The generator is std::mt19937_64, whose output sequence is mandated by
 * the C++ standard, so identical seeds produce identical streams on every
 * platform. Variates are derived from raw 64-bit outputs with fixed
 * arithmetic (no standard-library distributions, whose mappings are
 * implementation-defined):
 *
 *   uniform01:   (next() >> 11) * 2^-53            in [0, 1)
 *   exponential: -log1p(-uniform01()) / rate
 *   index:       floor(uniform01() * n), clamped to n - 1
 *
 * Golden fixtures therefore stay valid across compilers and versions.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform draw from [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Exponential variate with the given rate (mean 1/rate).
    double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

    /// Uniform index into a container of size n (n >= 1).
    std::size_t index(std::size_t n) {
        const auto i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

private:
    std::mt19937_64 gen_;
};

/// Mixes a stream index into a base seed (splitmix64 finalizer over the
/// i-th state of a splitmix64 sequence started at `seed`). Streams derived
/// for different indices are independent for practical purposes, and the
/// derivation is O(1), so per-stream work can run in parallel and still
/// match a serial run exactly.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace tagdecay
