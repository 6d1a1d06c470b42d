#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace triset {

/// Seeded generator used everywhere randomness is needed.
///
/// Uniform variates are derived from raw 64-bit engine output rather than the
/// standard distributions, whose algorithms are implementation defined, so a
/// seed produces the same stream with every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). `n` must be positive.
    std::size_t below(std::size_t n);

    /// Standard normal variate (Box-Muller, no caching).
    double normal();

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Mixes several integers into one well-distributed seed (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace triset
