#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ordlex {

/// SplitMix64: the project-wide random number generator. Chosen because it
/// is seedable, has a trivial portable implementation, and produces the
/// same stream on every platform and standard library. std::shuffle and
/// std::uniform_*_distribution are implementation-defined and must not be
/// used anywhere results are serialized.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, n), unbiased via rejection.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    /// Uniform draw from the open interval (0, 1), 53-bit resolution.
    double next_double_open() {
        for (;;) {
            const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
            if (u != 0.0) return u;
        }
    }

    /// Uniform draw from the open interval (lo, hi).
    double next_in(double lo, double hi) {
        return lo + (hi - lo) * next_double_open();
    }

private:
    std::uint64_t state_;
};

/// Deterministic seed derivation: feeds `salt` into the SplitMix64 stream
/// advance and finalizer. Realization i of an ensemble with master seed m
/// uses mix64(m, i); sub-streams within a realization use further tags.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + (salt + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Sub-stream tags for seed derivation.
inline constexpr std::uint64_t kSeedTagJitter = 0x6A69;
inline constexpr std::uint64_t kSeedTagShuffle = 0x7368;

/// In-place Fisher-Yates shuffle driven by the portable generator.
template <typename T>
void fisher_yates(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        using std::swap;
        swap(v[i - 1], v[j]);
    }
}

}  // namespace ordlex
