#pragma once

#include <cstdint>

namespace unimod {

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by the golden
/// gamma 0x9e3779b97f4a7c15; each output is the finalizer applied to the
/// new state. Reference vectors: seed 0 yields 0xe220a8397b1dcdaf first;
/// seed 1234567 yields 6457827717110365317, 3203168211198807973.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    constexpr std::uint64_t next() noexcept { return mix(state_ += kGamma); }

    /// Uniform on [0, range) by Lemire's multiply-and-reject; range >= 1.
    constexpr std::uint64_t below(std::uint64_t range) noexcept {
        unsigned __int128 m = static_cast<unsigned __int128>(next()) * range;
        auto low = static_cast<std::uint64_t>(m);
        if (low < range) {
            const std::uint64_t threshold = (0 - range) % range;
            while (low < threshold) {
                m = static_cast<unsigned __int128>(next()) * range;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

/// Seed of the independent stream for sample `index` under `seed`:
/// mix(seed ^ mix(index + gamma)). Depends only on (seed, index), so any
/// partition of the index range draws the same samples.
constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64::mix(seed ^ SplitMix64::mix(index + SplitMix64::kGamma));
}

} // namespace unimod
