#ifndef MUSHROOM_RNG_HPP
#define MUSHROOM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

// Seeding and sampling helpers. std::mt19937_64's output sequence is pinned
// by the standard, but the <random> distributions are not; everything here
// maps engine words to values explicitly so that identical seeds give
// identical streams on any platform.

namespace mushroom {

// SplitMix64 step; used to derive independent child seeds from a master seed.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based split: child seed i of a master seed.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t counter) {
    return mix64(master ^ mix64(counter + 1));
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound). Multiply-shift map; the bias is O(bound/2^64).
inline std::uint64_t uniform_below(Rng& g, std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(g()) * bound) >> 64);
}

inline double uniform_range(Rng& g, double lo, double hi) {
    return lo + uniform01(g) * (hi - lo);
}

// Log-uniform draw over [lo, hi], lo > 0.
inline double log_uniform(Rng& g, double lo, double hi) {
    double e = uniform_range(g, std::log10(lo), std::log10(hi));
    return std::pow(10.0, e);
}

// First n entries of a seeded partial Fisher-Yates permutation of 0..total-1,
// in draw order. n == total gives a full permutation.
inline std::vector<std::uint32_t> sample_without_replacement(Rng& g,
                                                             std::uint32_t total,
                                                             std::uint32_t n) {
    std::vector<std::uint32_t> idx(total);
    for (std::uint32_t i = 0; i < total; ++i) idx[i] = i;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint32_t j = i + static_cast<std::uint32_t>(uniform_below(g, total - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(n);
    return idx;
}

// Standard normal via Box-Muller on the canonical uniform. Used by test
// oracles; kept here so they stay platform-independent.
inline double normal01(Rng& g) {
    double u1 = uniform01(g);
    while (u1 <= 0.0) u1 = uniform01(g);
    double u2 = uniform01(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

} // namespace mushroom

#endif
