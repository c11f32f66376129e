#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace shelfplan {

/// Deterministic random source used by every stochastic operator.
///
/// Wraps std::mt19937_64 but keeps the bounded-int and unit-real draw
/// algorithms in our own hands, so a given seed yields the same stream on
/// every platform and standard library. All engine randomness flows through
/// one Rng instance in a fixed draw order; that is what makes whole runs
/// reproducible from a single seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [lo, hi], both bounds inclusive.
    int uniform_int(int lo, int hi) {
        assert(lo <= hi);
        const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) -
                                                     static_cast<std::int64_t>(lo)) +
                          1;
        // rejection from the top keeps the draw unbiased
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return static_cast<int>(static_cast<std::int64_t>(lo) +
                                static_cast<std::int64_t>(x % span));
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// True with probability p.
    bool chance(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace shelfplan
