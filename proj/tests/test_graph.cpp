#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "polycount/errors.hpp"
#include "polycount/graph.hpp"
#include "polycount/random_gen.hpp"

using namespace polycount;

namespace {

BipartiteGraph k22() { return BipartiteGraph(2, 2, {{0, 1}, {1, 0}}); }

BipartiteGraph disjoint_edges(uint32_t n) {
    std::vector<uint32_t> id(n);
    for (uint32_t i = 0; i < n; ++i) id[i] = i;
    return BipartiteGraph(n, 1, {id});
}

VertexSet set_of(const BipartiteGraph& g, std::initializer_list<Vertex> vertices) {
    VertexSet s = g.empty_set();
    for (Vertex v : vertices) s.set(g.flat(v));
    return s;
}

} // namespace

TEST_CASE("build: K_{2,2} from identity and swap matchings") {
    const auto g = k22();
    // every left vertex adjacent to both right vertices
    for (uint32_t l = 0; l < 2; ++l) {
        auto nbrs = g.adjacency(l);
        std::sort(nbrs.begin(), nbrs.end());
        CHECK(nbrs == std::vector<uint32_t>{2, 3});
    }
    // G^2 of the 4-cycle is K_4
    for (uint32_t v = 0; v < 4; ++v) CHECK(g.square_adjacency(v).size() == 3);
}

TEST_CASE("build: single edge for n=1, delta=1") {
    const BipartiteGraph g(1, 1, {{0}});
    CHECK(g.adjacency(0) == std::vector<uint32_t>{1});
    CHECK(g.adjacency(1) == std::vector<uint32_t>{0});
}

TEST_CASE("build: doubled matching keeps multiplicity, square adjacency has no same-side pairs") {
    const BipartiteGraph g(2, 2, {{0, 1}, {0, 1}});
    CHECK(g.adjacency(0) == std::vector<uint32_t>{2, 2}); // degree 2 counting multiplicity
    CHECK(g.square_adjacency(0) == std::vector<uint32_t>{2});
    CHECK(g.square_adjacency(2) == std::vector<uint32_t>{0});
}

TEST_CASE("build: non-bijective matching rejected") {
    CHECK_THROWS_AS(BipartiteGraph(2, 1, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(BipartiteGraph(2, 1, {{0, 2}}), PreconditionError);
    CHECK_THROWS_AS(BipartiteGraph(2, 2, {{0, 1}}), PreconditionError);
}

TEST_CASE("neighborhood on K_{2,2}") {
    const auto g = k22();
    CHECK(neighborhood(g, set_of(g, {{Side::L, 0}})) == set_of(g, {{Side::R, 0}, {Side::R, 1}}));
    CHECK(neighborhood(g, set_of(g, {{Side::L, 0}, {Side::R, 0}})) ==
          set_of(g, {{Side::L, 1}, {Side::R, 1}}));
    VertexSet all = g.empty_set();
    all.set();
    CHECK(neighborhood(g, all).none());
    CHECK_THROWS_AS(neighborhood(g, g.empty_set()), PreconditionError);
}

TEST_CASE("square_components") {
    const auto g = k22();
    SUBCASE("same-side pair at distance 2 is one component") {
        const auto parts = square_components(g, set_of(g, {{Side::L, 0}, {Side::L, 1}}));
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].count() == 2);
    }
    SUBCASE("disconnected pieces split") {
        const auto h = disjoint_edges(2);
        const auto parts = square_components(h, set_of(h, {{Side::L, 0}, {Side::L, 1}}));
        CHECK(parts.size() == 2);
    }
    SUBCASE("empty set gives empty partition") {
        CHECK(square_components(g, g.empty_set()).empty());
    }
}

TEST_CASE("distance") {
    const auto g = k22();
    CHECK(distance(g, {Side::L, 0}, {Side::L, 1}) == 2);
    CHECK(distance(g, {Side::L, 0}, {Side::L, 0}) == 0);
    const auto h = disjoint_edges(2);
    CHECK(!distance(h, {Side::L, 0}, {Side::R, 1}).has_value());
}

TEST_CASE("square adjacency matches distance <= 2 and the degree bound") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        const auto g = sample_graph({4, 3, seed});
        for (uint32_t u = 0; u < g.vertex_count(); ++u) {
            CHECK(g.square_adjacency(u).size() <= g.delta() * g.delta());
            VertexSet listed = g.empty_set();
            for (uint32_t w : g.square_adjacency(u)) listed.set(w);
            for (uint32_t w = 0; w < g.vertex_count(); ++w) {
                const auto d = distance(g, g.vertex(u), g.vertex(w));
                const bool close = u != w && d.has_value() && *d <= 2;
                CHECK(listed.test(w) == close);
            }
        }
    }
}

TEST_CASE("neighborhood is disjoint from its argument") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        const auto g = sample_graph({5, 2, seed});
        std::mt19937_64 engine(seed);
        VertexSet u = g.empty_set();
        for (uint32_t v = 0; v < g.vertex_count(); ++v)
            if (engine() & 1u) u.set(v);
        if (u.none()) u.set(0);
        CHECK(!neighborhood(g, u).intersects(u));
    }
}

TEST_CASE("square_components blocks are pairwise non-adjacent in G^2") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        const auto g = sample_graph({5, 2, seed});
        std::mt19937_64 engine(seed ^ 0xabcdefull);
        VertexSet u = g.empty_set();
        for (uint32_t v = 0; v < g.vertex_count(); ++v)
            if (engine() & 1u) u.set(v);
        const auto parts = square_components(g, u);
        VertexSet joined = g.empty_set();
        for (const auto& part : parts) {
            CHECK(!part.intersects(joined));
            joined |= part;
        }
        CHECK(joined == u);
        for (size_t i = 0; i < parts.size(); ++i) {
            for (size_t j = i + 1; j < parts.size(); ++j) {
                for (auto v = parts[i].find_first(); v != VertexSet::npos;
                     v = parts[i].find_next(v))
                    for (uint32_t w : g.square_adjacency(static_cast<uint32_t>(v)))
                        CHECK(!parts[j].test(w));
            }
        }
    }
}

TEST_CASE("graph text format round-trips") {
    const auto g = sample_graph({5, 3, 42});
    const std::string text = graph_to_string(g);
    std::istringstream in(text);
    const auto parsed = parse_graph(in);
    CHECK(parsed == g);
    CHECK(graph_to_string(parsed) == text);
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            parse_graph(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_line("", 1);
    expect_line("2\n", 1);
    expect_line("2 1\n0 x\n", 2);
    expect_line("2 2\n0 1\n", 3);
    expect_line("2 1\n0 0\n", 2); // bijection failure reported on the offending row
}
