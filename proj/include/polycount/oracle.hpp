#pragma once

#include <cstdint>
#include <vector>

#include "polycount/graph.hpp"
#include "polycount/numeric.hpp"

namespace polycount {

// Brute-force ground truth, deliberately structured as filters over raw
// enumeration rather than polymer sums. All arithmetic is exact.

struct OracleBudget {
    uint64_t max_enumeration = 1ull << 24;
};

// Z(G, lambda) = sum over independent sets I of lambda^|I|, computed by the
// one-side sum  Z = sum_{S subseteq L} lambda^|S| (1+lambda)^{n-|N(S)|}.
Rational count_is(const BipartiteGraph& g, const Rational& lambda,
                  const OracleBudget& budget = {});

// Same sum restricted to |I cap X| < alpha_n.
Rational count_is_cluster(const BipartiteGraph& g, Side side, uint32_t alpha_n,
                          const Rational& lambda, const OracleBudget& budget = {});

// Sums over I_L union I_R and I_L intersect I_R, each enumerated directly
// from its own membership condition.
Rational count_is_cluster_union(const BipartiteGraph& g, uint32_t alpha_n, const Rational& lambda,
                                const OracleBudget& budget = {});
Rational count_is_cluster_intersection(const BipartiteGraph& g, uint32_t alpha_n,
                                       const Rational& lambda, const OracleBudget& budget = {});

// |C(G)|: proper q-colorings via the one-side product
// sum_{sigma_L} prod_{v in R} (q - #distinct colors on N(v)).
BigInt count_colorings(const BipartiteGraph& g, uint32_t q, const OracleBudget& budget = {});

// Histogram of d_X(sigma) over all proper colorings (full two-side
// enumeration; d_X couples the sides). Index d ranges over 0..2n.
std::vector<BigInt> count_colorings_by_deviation(const BipartiteGraph& g,
                                                 const std::vector<int>& x_colors, uint32_t q,
                                                 const OracleBudget& budget = {});

// |C_X(G)| = #{proper sigma : d_X(sigma) < alpha_n}.
BigInt count_colorings_cluster(const BipartiteGraph& g, const std::vector<int>& x_colors,
                               uint32_t alpha_n, uint32_t q, const OracleBudget& budget = {});

// |C_Gamma(G)|: proper colorings agreeing with the given labels on the
// fixed vertices, coloring the rest of L from X and the rest of R from
// [q] \ X. `fixed` holds (flat id, color) pairs.
BigInt count_cluster_extensions(const BipartiteGraph& g, const std::vector<int>& x_colors,
                                uint32_t q, const std::vector<std::pair<uint32_t, int>>& fixed,
                                const OracleBudget& budget = {});

} // namespace polycount
