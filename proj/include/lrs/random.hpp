#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace lrs {

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

/// splitmix64 finalizer; used to derive per-trial seeds and edge coefficients.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed of trial `t` under a master seed. Stable across platforms.
constexpr std::uint64_t trial_seed(std::uint64_t master, std::uint64_t t) noexcept {
    return mix64(master + (t + 1) * golden_gamma);
}

using Rng = std::mt19937_64;
inline constexpr const char* rng_name = "mt19937_64";

/// Uniform draw from [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <class T>
void shuffle_in_place(std::span<T> items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace lrs
