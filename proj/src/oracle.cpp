#include "polycount/oracle.hpp"

#include <algorithm>
#include <bit>

#include "polycount/errors.hpp"

namespace polycount {

namespace {

void require_enumeration(uint64_t units, const OracleBudget& budget, const char* who) {
    if (units > budget.max_enumeration)
        throw ResourceError(std::string(who) + ": enumeration exceeds budget");
}

// Neighbor bitmasks of one side's vertices over the opposite side.
std::vector<uint64_t> neighbor_masks(const BipartiteGraph& g, Side side) {
    if (g.n() > 63) throw ResourceError("oracle: side enumeration limited to n <= 63");
    std::vector<uint64_t> masks(g.n(), 0);
    const uint32_t base = side == Side::L ? 0 : g.n();
    const uint32_t other_base = side == Side::L ? g.n() : 0;
    for (uint32_t i = 0; i < g.n(); ++i)
        for (uint32_t w : g.adjacency(base + i)) masks[i] |= 1ull << (w - other_base);
    return masks;
}

// Walks all S subseteq side with |S| <= size_cap, reporting (|S|, |N(S)|).
template <typename Visit>
void for_each_subset(const std::vector<uint64_t>& masks, uint32_t size_cap, Visit&& visit) {
    const uint32_t n = static_cast<uint32_t>(masks.size());
    // Recursion over include/exclude keeps |N(S)| incremental.
    auto rec = [&](auto&& self, uint32_t next, uint32_t size, uint64_t nbr) -> void {
        if (next == n) {
            visit(size, static_cast<uint32_t>(std::popcount(nbr)));
            return;
        }
        self(self, next + 1, size, nbr);
        if (size < size_cap) self(self, next + 1, size + 1, nbr | masks[next]);
    };
    rec(rec, 0, 0, 0);
}

std::vector<Rational> powers(const Rational& base, uint32_t up_to) {
    std::vector<Rational> table(up_to + 1);
    table[0] = 1;
    for (uint32_t k = 1; k <= up_to; ++k) table[k] = table[k - 1] * base;
    return table;
}

void validate_lambda(const Rational& lambda) {
    if (lambda < 0) throw PreconditionError("oracle: lambda must be nonnegative");
}

void validate_color_set(const std::vector<int>& x_colors, uint32_t q) {
    if (q < 2) throw PreconditionError("oracle: q must be >= 2");
    if (x_colors.empty() || x_colors.size() >= q)
        throw PreconditionError("oracle: X must satisfy empty < X < [q]");
    std::vector<bool> seen(q + 1, false);
    for (int c : x_colors) {
        if (c < 1 || static_cast<uint32_t>(c) > q || seen[c])
            throw PreconditionError("oracle: X must be a duplicate-free subset of [q]");
        seen[c] = true;
    }
}

uint64_t checked_pow(uint64_t base, uint32_t exp, uint64_t cap) {
    uint64_t value = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (value > cap / base) return cap + 1;
        value *= base;
    }
    return value;
}

} // namespace

Rational count_is(const BipartiteGraph& g, const Rational& lambda, const OracleBudget& budget) {
    validate_lambda(lambda);
    require_enumeration(checked_pow(2, g.n(), budget.max_enumeration), budget, "count_is");
    const auto masks = neighbor_masks(g, Side::L);
    const auto lam = powers(lambda, g.n());
    const auto lam1 = powers(lambda + 1, g.n());
    Rational total = 0;
    for_each_subset(masks, g.n(), [&](uint32_t size, uint32_t covered) {
        total += lam[size] * lam1[g.n() - covered];
    });
    return total;
}

Rational count_is_cluster(const BipartiteGraph& g, Side side, uint32_t alpha_n,
                          const Rational& lambda, const OracleBudget& budget) {
    validate_lambda(lambda);
    if (alpha_n == 0) return 0; // |I cap X| < 0 is unsatisfiable
    require_enumeration(checked_pow(2, g.n(), budget.max_enumeration), budget, "count_is_cluster");
    const auto masks = neighbor_masks(g, side);
    const auto lam = powers(lambda, g.n());
    const auto lam1 = powers(lambda + 1, g.n());
    const uint32_t size_cap = std::min(g.n(), alpha_n - 1);
    Rational total = 0;
    for_each_subset(masks, size_cap, [&](uint32_t size, uint32_t covered) {
        total += lam[size] * lam1[g.n() - covered];
    });
    return total;
}

Rational count_is_cluster_union(const BipartiteGraph& g, uint32_t alpha_n, const Rational& lambda,
                                const OracleBudget& budget) {
    validate_lambda(lambda);
    require_enumeration(checked_pow(2, g.n(), budget.max_enumeration), budget,
                        "count_is_cluster_union");
    const auto masks = neighbor_masks(g, Side::L);
    const auto lam = powers(lambda, g.n());
    const auto lam1 = powers(lambda + 1, g.n());
    // I = S sqcup T with S = I cap L; membership in I_L union I_R means
    // |S| < alpha_n (T free) or |T| < alpha_n (T small, counted by size).
    Rational total = 0;
    for_each_subset(masks, g.n(), [&](uint32_t size, uint32_t covered) {
        const uint32_t free = g.n() - covered;
        if (size < alpha_n) {
            total += lam[size] * lam1[free];
        } else {
            Rational small = 0;
            for (uint32_t j = 0; j < alpha_n && j <= free; ++j)
                small += Rational(binomial(free, j)) * lam[j];
            total += lam[size] * small;
        }
    });
    return total;
}

Rational count_is_cluster_intersection(const BipartiteGraph& g, uint32_t alpha_n,
                                       const Rational& lambda, const OracleBudget& budget) {
    validate_lambda(lambda);
    if (alpha_n == 0) return 0;
    require_enumeration(checked_pow(2, g.n(), budget.max_enumeration), budget,
                        "count_is_cluster_intersection");
    const auto masks = neighbor_masks(g, Side::L);
    const auto lam = powers(lambda, g.n());
    const uint32_t size_cap = std::min(g.n(), alpha_n - 1);
    Rational total = 0;
    for_each_subset(masks, size_cap, [&](uint32_t size, uint32_t covered) {
        const uint32_t free = g.n() - covered;
        Rational small = 0;
        for (uint32_t j = 0; j < alpha_n && j <= free; ++j)
            small += Rational(binomial(free, j)) * lam[j];
        total += lam[size] * small;
    });
    return total;
}

BigInt count_colorings(const BipartiteGraph& g, uint32_t q, const OracleBudget& budget) {
    if (q < 1) throw PreconditionError("count_colorings: q must be >= 1");
    if (q > 31) throw ResourceError("count_colorings: q > 31 unsupported");
    require_enumeration(checked_pow(q, g.n(), budget.max_enumeration), budget, "count_colorings");
    const uint32_t n = g.n();
    std::vector<int> sigma(n, 0); // colors 0..q-1 internally
    BigInt total = 0;
    while (true) {
        BigInt ways = 1;
        for (uint32_t r = 0; r < n && ways != 0; ++r) {
            uint32_t used = 0;
            for (uint32_t w : g.adjacency(n + r)) used |= 1u << sigma[w];
            ways *= q - std::popcount(used);
        }
        total += ways;
        uint32_t pos = 0;
        while (pos < n && sigma[pos] == static_cast<int>(q) - 1) sigma[pos++] = 0;
        if (pos == n) break;
        ++sigma[pos];
    }
    return total;
}

std::vector<BigInt> count_colorings_by_deviation(const BipartiteGraph& g,
                                                 const std::vector<int>& x_colors, uint32_t q,
                                                 const OracleBudget& budget) {
    validate_color_set(x_colors, q);
    if (q > 31) throw ResourceError("count_colorings_by_deviation: q > 31 unsupported");
    require_enumeration(checked_pow(q, 2 * g.n(), budget.max_enumeration), budget,
                        "count_colorings_by_deviation");
    uint32_t x_mask = 0;
    for (int c : x_colors) x_mask |= 1u << (c - 1);
    const uint32_t total_vertices = 2 * g.n();
    std::vector<int> sigma(total_vertices, 0);
    std::vector<BigInt> histogram(total_vertices + 1, 0);
    while (true) {
        bool proper = true;
        for (uint32_t l = 0; l < g.n() && proper; ++l)
            for (uint32_t w : g.adjacency(l))
                if (sigma[l] == sigma[w]) {
                    proper = false;
                    break;
                }
        if (proper) {
            uint32_t deviation = 0;
            for (uint32_t l = 0; l < g.n(); ++l)
                if (!((x_mask >> sigma[l]) & 1u)) ++deviation;
            for (uint32_t r = g.n(); r < total_vertices; ++r)
                if ((x_mask >> sigma[r]) & 1u) ++deviation;
            ++histogram[deviation];
        }
        uint32_t pos = 0;
        while (pos < total_vertices && sigma[pos] == static_cast<int>(q) - 1) sigma[pos++] = 0;
        if (pos == total_vertices) break;
        ++sigma[pos];
    }
    return histogram;
}

BigInt count_colorings_cluster(const BipartiteGraph& g, const std::vector<int>& x_colors,
                               uint32_t alpha_n, uint32_t q, const OracleBudget& budget) {
    const auto histogram = count_colorings_by_deviation(g, x_colors, q, budget);
    BigInt total = 0;
    for (uint32_t d = 0; d < alpha_n && d < histogram.size(); ++d) total += histogram[d];
    return total;
}

BigInt count_cluster_extensions(const BipartiteGraph& g, const std::vector<int>& x_colors,
                                uint32_t q, const std::vector<std::pair<uint32_t, int>>& fixed,
                                const OracleBudget& budget) {
    validate_color_set(x_colors, q);
    const uint32_t total_vertices = 2 * g.n();
    // Per-vertex candidate colors: fixed vertices get a singleton, free
    // L-vertices draw from X and free R-vertices from [q] \ X.
    std::vector<std::vector<int>> domain(total_vertices);
    std::vector<bool> in_x(q + 1, false);
    for (int c : x_colors) in_x[c] = true;
    for (uint32_t v = 0; v < total_vertices; ++v) {
        for (uint32_t c = 1; c <= q; ++c)
            if (in_x[c] == (v < g.n())) domain[v].push_back(static_cast<int>(c));
    }
    for (const auto& [v, c] : fixed) {
        if (v >= total_vertices || c < 1 || static_cast<uint32_t>(c) > q)
            throw PreconditionError("count_cluster_extensions: fixed assignment out of range");
        domain[v] = {c};
    }
    uint64_t combos = 1;
    for (const auto& d : domain) {
        if (d.empty()) return 0;
        combos = std::min(combos * d.size(), budget.max_enumeration + 1);
    }
    require_enumeration(combos, budget, "count_cluster_extensions");

    std::vector<uint32_t> choice(total_vertices, 0);
    BigInt total = 0;
    while (true) {
        bool proper = true;
        for (uint32_t l = 0; l < g.n() && proper; ++l)
            for (uint32_t w : g.adjacency(l))
                if (domain[l][choice[l]] == domain[w][choice[w]]) {
                    proper = false;
                    break;
                }
        if (proper) ++total;
        uint32_t pos = 0;
        while (pos < total_vertices && choice[pos] + 1 == domain[pos].size()) choice[pos++] = 0;
        if (pos == total_vertices) break;
        ++choice[pos];
    }
    return total;
}

} // namespace polycount
