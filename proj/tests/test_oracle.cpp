#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "polycount/errors.hpp"
#include "polycount/oracle.hpp"
#include "polycount/random_gen.hpp"

using namespace polycount;

namespace {

BipartiteGraph k22() { return BipartiteGraph(2, 2, {{0, 1}, {1, 0}}); }
BipartiteGraph k11() { return BipartiteGraph(1, 1, {{0}}); }

// Independent oracle for the oracle: all 2^{2n} subsets.
Rational naive_count_is(const BipartiteGraph& g, const Rational& lambda) {
    const uint32_t total = 2 * g.n();
    Rational sum = 0;
    for (uint32_t mask = 0; mask < (1u << total); ++mask) {
        bool independent = true;
        for (uint32_t v = 0; v < total && independent; ++v) {
            if (!((mask >> v) & 1u)) continue;
            for (uint32_t w : g.adjacency(v))
                if ((mask >> w) & 1u) {
                    independent = false;
                    break;
                }
        }
        if (independent) sum += rational_pow(lambda, std::popcount(mask));
    }
    return sum;
}

BigInt naive_count_colorings(const BipartiteGraph& g, uint32_t q) {
    const uint32_t total = 2 * g.n();
    std::vector<int> sigma(total, 1);
    BigInt count = 0;
    while (true) {
        bool proper = true;
        for (uint32_t l = 0; l < g.n() && proper; ++l)
            for (uint32_t w : g.adjacency(l))
                if (sigma[l] == sigma[w]) {
                    proper = false;
                    break;
                }
        if (proper) ++count;
        uint32_t pos = 0;
        while (pos < total && sigma[pos] == static_cast<int>(q)) sigma[pos++] = 1;
        if (pos == total) break;
        ++sigma[pos];
    }
    return count;
}

std::vector<std::vector<int>> color_subsets_of_size(uint32_t q, uint32_t k) {
    std::vector<std::vector<int>> result;
    std::vector<int> current;
    auto rec = [&](auto&& self, int from) -> void {
        if (current.size() == k) {
            result.push_back(current);
            return;
        }
        for (int c = from; c <= static_cast<int>(q); ++c) {
            current.push_back(c);
            self(self, c + 1);
            current.pop_back();
        }
    };
    rec(rec, 1);
    return result;
}

} // namespace

TEST_CASE("count_is fixtures") {
    CHECK(count_is(k22(), 1) == 7);
    CHECK(count_is(k22(), 2) == 17);
    const Rational lambda(3, 7);
    CHECK(count_is(k11(), lambda) == 1 + 2 * lambda);
}

TEST_CASE("count_is agrees with the naive two-side enumeration") {
    for (uint64_t seed = 0; seed < 6; ++seed) {
        const auto g = sample_graph({4, static_cast<uint32_t>(seed % 3 + 1), seed});
        for (const Rational& lambda : {Rational(1), Rational(1, 2), Rational(5)})
            CHECK(count_is(g, lambda) == naive_count_is(g, lambda));
    }
}

TEST_CASE("count_is_cluster fixtures") {
    CHECK(count_is_cluster(k22(), Side::L, 2, 1) == 6);
    CHECK(count_is_cluster(k22(), Side::L, 0, 1) == 0);
    CHECK(count_is_cluster(k22(), Side::L, 3, 1) == count_is(k22(), 1));
    CHECK(count_is_cluster(k22(), Side::R, 2, 1) == 6);
}

TEST_CASE("cluster union and intersection satisfy inclusion-exclusion") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        const auto g = sample_graph({4, 2, seed});
        for (uint32_t alpha_n = 1; alpha_n <= 5; ++alpha_n) {
            const Rational lambda(2);
            const Rational zl = count_is_cluster(g, Side::L, alpha_n, lambda);
            const Rational zr = count_is_cluster(g, Side::R, alpha_n, lambda);
            const Rational zu = count_is_cluster_union(g, alpha_n, lambda);
            const Rational zi = count_is_cluster_intersection(g, alpha_n, lambda);
            CHECK(zl + zr == zu + zi);
        }
    }
}

TEST_CASE("count_colorings fixtures") {
    CHECK(count_colorings(k22(), 3) == 18);
    CHECK(count_colorings(k22(), 2) == 2);
    for (uint32_t q : {2u, 3u, 5u}) CHECK(count_colorings(k11(), q) == q * (q - 1));
}

TEST_CASE("count_colorings agrees with the naive two-side enumeration") {
    for (uint64_t seed = 0; seed < 4; ++seed) {
        const auto g = sample_graph({3, static_cast<uint32_t>(seed % 3 + 1), seed});
        CHECK(count_colorings(g, 3) == naive_count_colorings(g, 3));
    }
}

TEST_CASE("count_colorings_cluster fixtures on K_{2,2}, q=3, X={1}") {
    const auto g = k22();
    CHECK(count_colorings_cluster(g, {1}, 1, 3) == 4);
    CHECK(count_colorings_cluster(g, {1}, 2, 3) == 8);
    CHECK(count_colorings_cluster(g, {1}, 2 * g.n() + 1, 3) == 18); // vacuous filter
    CHECK(count_colorings_cluster(g, {1}, 0, 3) == 0);
}

TEST_CASE("budget exceeded raises resource errors") {
    OracleBudget tiny{8};
    const auto g = sample_graph({4, 2, 0});
    CHECK_THROWS_AS(count_is(g, 1, tiny), ResourceError);
    CHECK_THROWS_AS(count_colorings(g, 3, tiny), ResourceError);
    CHECK_THROWS_AS(count_colorings_cluster(g, {1}, 1, 3, tiny), ResourceError);
}

TEST_CASE("color symmetry and union bounds across ground clusters") {
    // |C_X| depends only on |X|; the pairwise-intersection bound brackets
    // the union of clusters.
    const uint32_t q = 3;
    const uint32_t q_lo = q / 2;
    const uint32_t q_hi = (q + 1) / 2;
    for (uint64_t seed = 0; seed < 4; ++seed) {
        const auto g = sample_graph({2, 2, seed});
        const uint32_t alpha_n = 2;
        std::vector<std::vector<int>> all_x;
        for (uint32_t k : {q_lo, q_hi}) {
            if (k == 0 || k >= q) continue;
            for (auto& x : color_subsets_of_size(q, k)) all_x.push_back(x);
        }
        // sizes via the histogram oracle
        std::map<size_t, BigInt> sizes;
        for (size_t i = 0; i < all_x.size(); ++i)
            sizes[i] = count_colorings_cluster(g, all_x[i], alpha_n, q);
        for (size_t i = 0; i < all_x.size(); ++i)
            for (size_t j = 0; j < all_x.size(); ++j)
                if (all_x[i].size() == all_x[j].size()) CHECK(sizes[i] == sizes[j]);

        // exact union / pairwise intersections by direct enumeration
        const uint32_t total = 2 * g.n();
        std::vector<int> sigma(total, 1);
        BigInt union_count = 0;
        BigInt sum_counts = 0;
        BigInt pair_intersections = 0;
        while (true) {
            bool proper = true;
            for (uint32_t l = 0; l < g.n() && proper; ++l)
                for (uint32_t w : g.adjacency(l))
                    if (sigma[l] == sigma[w]) proper = false;
            if (proper) {
                std::vector<bool> in_cluster(all_x.size());
                uint32_t members = 0;
                for (size_t i = 0; i < all_x.size(); ++i) {
                    uint32_t deviation = 0;
                    for (uint32_t l = 0; l < g.n(); ++l)
                        if (std::find(all_x[i].begin(), all_x[i].end(), sigma[l]) ==
                            all_x[i].end())
                            ++deviation;
                    for (uint32_t r = g.n(); r < total; ++r)
                        if (std::find(all_x[i].begin(), all_x[i].end(), sigma[r]) !=
                            all_x[i].end())
                            ++deviation;
                    in_cluster[i] = deviation < alpha_n;
                    if (in_cluster[i]) ++members;
                }
                if (members > 0) ++union_count;
                sum_counts += members;
                pair_intersections += BigInt(members) * (members - 1) / 2;
            }
            uint32_t pos = 0;
            while (pos < total && sigma[pos] == static_cast<int>(q)) sigma[pos++] = 1;
            if (pos == total) break;
            ++sigma[pos];
        }
        BigInt sum_from_oracle = 0;
        for (auto& [i, size] : sizes) sum_from_oracle += size;
        CHECK(sum_from_oracle == sum_counts);
        CHECK(union_count <= sum_counts);
        CHECK(sum_counts <= union_count + 2 * pair_intersections);
    }
}
