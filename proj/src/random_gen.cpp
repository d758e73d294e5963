#include "polycount/random_gen.hpp"

#include <numeric>

#include "polycount/errors.hpp"

namespace polycount {

std::vector<uint32_t> sample_permutation(std::mt19937_64& engine, uint32_t n) {
    std::vector<uint32_t> pi(n);
    std::iota(pi.begin(), pi.end(), 0u);
    for (uint32_t i = n; i > 1; --i) {
        const auto j = static_cast<uint32_t>(bounded_uniform(engine, i));
        std::swap(pi[i - 1], pi[j]);
    }
    return pi;
}

BipartiteGraph sample_graph(const SampleConfig& cfg) {
    if (cfg.n < 1 || cfg.delta < 1)
        throw PreconditionError("sample_graph: n and delta must be >= 1");
    uint64_t stream = cfg.seed;
    std::vector<std::vector<uint32_t>> matchings;
    matchings.reserve(cfg.delta);
    for (uint32_t i = 0; i < cfg.delta; ++i) {
        std::mt19937_64 engine(splitmix64_next(stream));
        matchings.push_back(sample_permutation(engine, cfg.n));
    }
    return BipartiteGraph(cfg.n, cfg.delta, std::move(matchings));
}

} // namespace polycount
