#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mssms {

using Rng = std::mt19937_64;

// Trial t of a run seeded with s draws from stream(s, t); results are then
// independent of how trials are scheduled across workers.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Unbiased draw from [0, n); rejection sampling keeps traces identical on any
// conforming platform (std distributions are implementation-defined).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline int uniform_int(Rng& rng, int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline double uniform_unit(Rng& rng) { return (rng() >> 11) * 0x1.0p-53; }

// Random size-r subset of {0,...,n-1}, sorted (partial Fisher-Yates).
inline std::vector<int> sample_subset(Rng& rng, int n, int r) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < r; ++i) {
        int j = uniform_int(rng, i, n - 1);
        std::swap(pool[i], pool[j]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + r);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mssms
