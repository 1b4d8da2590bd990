#pragma once

#include <cstdint>
#include <random>

namespace krrsel {

/// Deterministic, platform-stable random source.
///
/// std::mt19937_64 raw output is pinned by the standard; the distribution
/// transforms are hand-rolled here because std::uniform_real_distribution /
/// std::normal_distribution are implementation-defined and would break
/// bit-reproducibility across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform on [0,1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller; the sine mate is cached.
    double normal();

    /// Unbiased integer in [0, bound), bound >= 1, by rejection sampling.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Trial t of a run seeded with `base` uses Rng(trial_seed(base, t)).
inline std::uint64_t trial_seed(std::uint64_t base, std::uint64_t t) { return base + t; }

/// splitmix64 finalizer over (seed, stream): decorrelates the sub-streams a
/// single trial consumes (e.g. abscissa draws vs. noise draws vs. test points).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace krrsel
