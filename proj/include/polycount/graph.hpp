#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polycount {

enum class Side : uint8_t { L, R };

struct Vertex {
    Side side;
    uint32_t index;

    bool operator==(const Vertex&) const = default;
};

// Set of vertices over one or both sides, indexed by flat id:
// left j -> j, right k -> n + k.
using VertexSet = boost::dynamic_bitset<>;

// Delta-regular bipartite multigraph with n vertices per side, stored as its
// generating perfect matchings. Adjacency (with multiplicity) and the
// deduplicated G^2 adjacency are derived once at construction; the object is
// immutable afterwards and safe for concurrent reads.
class BipartiteGraph {
public:
    // matchings: delta permutations of [0,n); matching i joins left j to
    // right pi_i(j). Throws PreconditionError if a row is not a bijection.
    BipartiteGraph(uint32_t n, uint32_t delta, std::vector<std::vector<uint32_t>> matchings);

    uint32_t n() const { return n_; }
    uint32_t delta() const { return delta_; }
    uint32_t vertex_count() const { return 2 * n_; }

    const std::vector<std::vector<uint32_t>>& matchings() const { return matchings_; }

    uint32_t flat(Vertex v) const { return v.side == Side::L ? v.index : n_ + v.index; }
    Vertex vertex(uint32_t flat_id) const {
        return flat_id < n_ ? Vertex{Side::L, flat_id} : Vertex{Side::R, flat_id - n_};
    }

    // Neighbor multiset of a vertex (flat ids; one entry per incident edge).
    const std::vector<uint32_t>& adjacency(uint32_t flat_id) const { return adj_[flat_id]; }
    // Distinct vertices at G-distance 1 or 2 (sorted flat ids).
    const std::vector<uint32_t>& square_adjacency(uint32_t flat_id) const {
        return square_adj_[flat_id];
    }

    VertexSet empty_set() const { return VertexSet(vertex_count()); }

    // 64-bit FNV-1a over (n, delta, matchings); stable graph identity for reports.
    uint64_t fingerprint() const;

    bool operator==(const BipartiteGraph& other) const {
        return n_ == other.n_ && delta_ == other.delta_ && matchings_ == other.matchings_;
    }

private:
    uint32_t n_ = 0;
    uint32_t delta_ = 0;
    std::vector<std::vector<uint32_t>> matchings_;
    std::vector<std::vector<uint32_t>> adj_;
    std::vector<std::vector<uint32_t>> square_adj_;
};

// {v : d_G({v}, U) = 1} \ U. U must be nonempty.
VertexSet neighborhood(const BipartiteGraph& g, const VertexSet& u);

// Connected components of the subgraph of G^2 induced on U. Empty U gives an
// empty partition.
std::vector<VertexSet> square_components(const BipartiteGraph& g, const VertexSet& u);

// BFS shortest-path length in G; nullopt when disconnected.
std::optional<uint32_t> distance(const BipartiteGraph& g, Vertex u, Vertex v);

// Text format: first line "n delta", then delta lines each a permutation of
// 0..n-1. parse and serialize round-trip exactly.
BipartiteGraph parse_graph(std::istream& in);
BipartiteGraph parse_graph_file(const std::string& path);
void serialize_graph(const BipartiteGraph& g, std::ostream& out);
std::string graph_to_string(const BipartiteGraph& g);

} // namespace polycount
