#ifndef HYPERMATCH_RNG_HPP
#define HYPERMATCH_RNG_HPP

#include "hypermatch/numeric.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace hypermatch {

/// splitmix64 finalizer; trial i of a sweep runs on mix_seed(seed, i) so
/// results do not depend on scheduling.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + stream * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// mt19937_64 is fully specified by the standard; combined with the hand
/// rolled draws below, identical seeds give identical streams everywhere
/// (std::uniform_int_distribution would not).
using Rng = std::mt19937_64;

/// Unbiased uniform draw from {0..bound-1} by rejection.
inline uint64_t uniform_below(Rng& rng, uint64_t bound) {
    if (bound <= 1) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

/// Bernoulli(p) for exact rational p in [0,1], resolved through integer
/// draws only (denominator must fit in 64 bits).
inline bool bernoulli(Rng& rng, const Rat& p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    if (denominator(p) > BigInt(UINT64_MAX))
        throw std::invalid_argument("bernoulli: denominator exceeds 64 bits");
    uint64_t den = static_cast<uint64_t>(denominator(p));
    uint64_t num = static_cast<uint64_t>(numerator(p));
    return uniform_below(rng, den) < num;
}

/// Random k-subset of {1..n}, sorted, via partial Fisher-Yates.
inline std::vector<int> random_k_subset(Rng& rng, int n, int k) {
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i + 1;
    for (int i = 0; i < k; ++i) {
        uint64_t j = i + uniform_below(rng, static_cast<uint64_t>(n - i));
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hypermatch

#endif  // HYPERMATCH_RNG_HPP
