#pragma once

#include <cstdint>
#include <random>

#include "polycount/graph.hpp"

namespace polycount {

// Seeded sampling of G ~ G^bip_{n,Delta}: Delta independent uniform perfect
// matchings of K_{n,n}. The generator stack is fixed so fixtures never drift:
//   * sub-seed for matching i = (i+1)-th output of the SplitMix64 stream
//     started at the master seed,
//   * each matching is a Fisher-Yates shuffle of the identity permutation
//     driven by std::mt19937_64 seeded with that sub-seed,
//   * bounded draws use unbiased rejection sampling (see bounded_uniform).
// Identical config implies an identical graph on every platform.

struct SampleConfig {
    uint32_t n = 1;
    uint32_t delta = 1;
    uint64_t seed = 0;
};

inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Uniform draw from [0, bound) by rejection; free of modulo bias.
inline uint64_t bounded_uniform(std::mt19937_64& engine, uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t draw;
    do {
        draw = engine();
    } while (draw >= limit);
    return draw % bound;
}

std::vector<uint32_t> sample_permutation(std::mt19937_64& engine, uint32_t n);

BipartiteGraph sample_graph(const SampleConfig& cfg);

} // namespace polycount
