#pragma once

#include <cstdint>
#include <random>

namespace jtab {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/* One independent stream per (seed, trial): mt19937_64 seeded with
 * splitmix64(seed xor golden-ratio * (trial+1)).
 */
inline std::mt19937_64 trial_rng(uint64_t seed, uint64_t trial) {
    return std::mt19937_64(splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1))));
}

/* uniform in [0, m) by rejection, independent of the standard library's
 * distribution implementation
 */
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t m) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % m;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % m;
}

} // namespace jtab
