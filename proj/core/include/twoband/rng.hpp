#pragma once

#include <cstdint>

#include "twoband/band_matrix.hpp"

namespace twoband {

/// SplitMix64: tiny, well-known 64-bit generator. Chosen for reproducible
/// seed-per-cell derivation; every value stream is a pure function of the
/// seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double next_uniform(double low, double high) { return low + (high - low) * next_unit(); }

private:
    std::uint64_t state_;
};

/// Deterministic per-cell seed: the master seed mixed with the cell
/// coordinates through SplitMix64 steps.
std::uint64_t derive_seed(std::uint64_t master, int n, int b, int k);

/// Explicit-instance generator parameters: uniform entries in [low, high]
/// (independently for real and imaginary parts in Complex mode).
struct GeneratorSpec {
    int n = 1;
    int b = 1;
    int k = 1;
    Mode mode = Mode::PositiveReal;
    std::uint64_t seed = 0;
    double low = 0.5;
    double high = 2.0;
};

BandMatrix generate_band_matrix(const GeneratorSpec& spec);

} // namespace twoband
