#pragma once

#include <cstdint>
#include <random>

namespace temporl {

/// Deterministic RNG wrapper. All draws go through explicit helpers so that
/// streams are reproducible regardless of the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t uniform(std::uint64_t n) { return next_u64() % n; }

    /// Uniform double in [0, 1).
    double real01() { return double(next_u64() >> 11) * (1.0 / 9007199254740992.0); }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + std::int64_t(uniform(std::uint64_t(hi - lo + 1)));
    }

    /// Independent child stream derived from this seed and a stream id.
    Rng fork(std::uint64_t stream) const {
        std::uint64_t x = seed_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27; x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return Rng(x);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace temporl
