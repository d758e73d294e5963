#include "polycount/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "polycount/errors.hpp"

namespace polycount {

BipartiteGraph::BipartiteGraph(uint32_t n, uint32_t delta,
                               std::vector<std::vector<uint32_t>> matchings)
    : n_(n), delta_(delta), matchings_(std::move(matchings)) {
    if (n_ < 1) throw PreconditionError("graph: n must be >= 1");
    if (delta_ < 1) throw PreconditionError("graph: delta must be >= 1");
    if (matchings_.size() != delta_)
        throw PreconditionError("graph: expected " + std::to_string(delta_) + " matchings, got " +
                                std::to_string(matchings_.size()));
    std::vector<bool> seen(n_);
    for (size_t i = 0; i < matchings_.size(); ++i) {
        const auto& pi = matchings_[i];
        if (pi.size() != n_)
            throw PreconditionError("graph: matching " + std::to_string(i) + " has wrong length");
        std::fill(seen.begin(), seen.end(), false);
        for (uint32_t image : pi) {
            if (image >= n_ || seen[image])
                throw PreconditionError("graph: matching " + std::to_string(i) +
                                        " is not a bijection on [0,n)");
            seen[image] = true;
        }
    }

    // Adjacency keeps one entry per edge so every vertex has degree exactly
    // delta counting multiplicity.
    adj_.assign(2 * n_, {});
    for (const auto& pi : matchings_) {
        for (uint32_t j = 0; j < n_; ++j) {
            adj_[j].push_back(n_ + pi[j]);
            adj_[n_ + pi[j]].push_back(j);
        }
    }

    // G^2 adjacency: distance-1 pairs plus same-side pairs sharing a
    // neighbor. Multiplicity is collapsed; distances only care about
    // existence.
    square_adj_.assign(2 * n_, {});
    for (uint32_t v = 0; v < 2 * n_; ++v) {
        auto& out = square_adj_[v];
        for (uint32_t w : adj_[v]) {
            out.push_back(w);
            for (uint32_t x : adj_[w])
                if (x != v) out.push_back(x);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
}

uint64_t BipartiteGraph::fingerprint() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint32_t value) {
        for (int shift = 0; shift < 32; shift += 8) {
            h ^= (value >> shift) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(n_);
    mix(delta_);
    for (const auto& pi : matchings_)
        for (uint32_t image : pi) mix(image);
    return h;
}

VertexSet neighborhood(const BipartiteGraph& g, const VertexSet& u) {
    if (u.none()) throw PreconditionError("neighborhood: U must be nonempty");
    VertexSet out(g.vertex_count());
    for (auto v = u.find_first(); v != VertexSet::npos; v = u.find_next(v))
        for (uint32_t w : g.adjacency(static_cast<uint32_t>(v))) out.set(w);
    return out - u;
}

std::vector<VertexSet> square_components(const BipartiteGraph& g, const VertexSet& u) {
    std::vector<VertexSet> components;
    VertexSet remaining = u;
    for (auto start = remaining.find_first(); start != VertexSet::npos;
         start = remaining.find_first()) {
        VertexSet component(g.vertex_count());
        std::deque<uint32_t> queue{static_cast<uint32_t>(start)};
        component.set(start);
        remaining.reset(start);
        while (!queue.empty()) {
            uint32_t v = queue.front();
            queue.pop_front();
            for (uint32_t w : g.square_adjacency(v)) {
                if (remaining.test(w)) {
                    remaining.reset(w);
                    component.set(w);
                    queue.push_back(w);
                }
            }
        }
        components.push_back(std::move(component));
    }
    return components;
}

std::optional<uint32_t> distance(const BipartiteGraph& g, Vertex u, Vertex v) {
    const uint32_t source = g.flat(u);
    const uint32_t target = g.flat(v);
    if (source == target) return 0;
    std::vector<uint32_t> dist(g.vertex_count(), UINT32_MAX);
    dist[source] = 0;
    std::deque<uint32_t> queue{source};
    while (!queue.empty()) {
        uint32_t x = queue.front();
        queue.pop_front();
        for (uint32_t w : g.adjacency(x)) {
            if (dist[w] == UINT32_MAX) {
                dist[w] = dist[x] + 1;
                if (w == target) return dist[w];
                queue.push_back(w);
            }
        }
    }
    return std::nullopt;
}

BipartiteGraph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw ParseError(1, "empty input, expected 'n delta' header");
    ++line_no;
    uint32_t n = 0;
    uint32_t delta = 0;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> n >> delta) || (header >> extra))
            throw ParseError(line_no, "malformed header, expected 'n delta'");
    }
    if (n < 1 || delta < 1) throw ParseError(line_no, "n and delta must be >= 1");
    std::vector<std::vector<uint32_t>> matchings;
    matchings.reserve(delta);
    for (uint32_t i = 0; i < delta; ++i) {
        if (!std::getline(in, line))
            throw ParseError(line_no + 1, "expected matching row " + std::to_string(i));
        ++line_no;
        std::istringstream row(line);
        std::vector<uint32_t> pi;
        pi.reserve(n);
        uint32_t value = 0;
        while (row >> value) pi.push_back(value);
        if (!row.eof()) throw ParseError(line_no, "non-integer token in matching row");
        if (pi.size() != n)
            throw ParseError(line_no, "matching row has " + std::to_string(pi.size()) +
                                          " entries, expected " + std::to_string(n));
        matchings.push_back(std::move(pi));
    }
    try {
        return BipartiteGraph(n, delta, std::move(matchings));
    } catch (const PreconditionError& e) {
        throw ParseError(line_no, e.what());
    }
}

BipartiteGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
    return parse_graph(in);
}

void serialize_graph(const BipartiteGraph& g, std::ostream& out) {
    out << g.n() << ' ' << g.delta() << '\n';
    for (const auto& pi : g.matchings()) {
        for (uint32_t j = 0; j < g.n(); ++j) {
            if (j > 0) out << ' ';
            out << pi[j];
        }
        out << '\n';
    }
}

std::string graph_to_string(const BipartiteGraph& g) {
    std::ostringstream out;
    serialize_graph(g, out);
    return out.str();
}

} // namespace polycount
