#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "polycount/graph.hpp"
#include "polycount/numeric.hpp"

namespace polycount {

constexpr uint32_t kNoSizeCap = std::numeric_limits<uint32_t>::max();

// Integer cap equivalent to the real strict bound "size < real_bound": the
// least m with {k : k < m} = {k : k < real_bound} over integers, so
// ceil(real_bound) for fractional bounds and real_bound itself at integers.
uint32_t strict_size_cap(double real_bound);

// A polymer: support connected in G^2 plus a labeling of its vertices and the
// z-free weight a_gamma, so that w(gamma, z) = a_gamma z^{size}.
struct Polymer {
    std::vector<uint32_t> vertices; // sorted flat ids
    std::vector<int> labels;        // parallel to vertices; empty if unlabeled
    VertexSet support;
    VertexSet neighborhood;   // N_G(support)
    VertexSet square_closure; // support plus N_{G^2}(support); drives compatibility
    Rational weight;          // a_gamma, nonzero for every valid polymer

    uint32_t size() const { return static_cast<uint32_t>(vertices.size()); }
};

// A polymer model: host graph, allowed support vertices, per-vertex label
// domains (empty vector = unlabeled), the strict polymer-size bound alpha_n,
// and the weight function. A candidate is a valid polymer iff its support is
// connected in G^2, lies in the universe, has size < alpha_n and nonzero
// weight.
struct PolymerModel {
    const BipartiteGraph* graph = nullptr;
    VertexSet universe;
    uint32_t alpha_n = kNoSizeCap;
    std::vector<std::vector<int>> label_domain; // empty -> unlabeled model
    // Palette of off-support vertices; only used to prune label assignments
    // that force some extension count to zero. Empty disables pruning.
    std::vector<std::vector<int>> extension_domain;
    std::function<Rational(const BipartiteGraph&, const std::vector<uint32_t>&,
                           const std::vector<int>&)>
        weight_base;

    // Degree bound of Xi(z): disjoint supports cannot exceed the universe.
    uint32_t degree_bound() const { return static_cast<uint32_t>(universe.count()); }
};

// d_{G^2} between the supports exceeds 1: disjoint and no G^2 edge across.
bool compatible(const Polymer& g1, const Polymer& g2);

// Every subset of `universe` containing `root`, connected in G^2, of size at
// most max_size — each exactly once, in depth-first order.
void enumerate_supports(const BipartiteGraph& g, const VertexSet& universe, uint32_t root,
                        uint32_t max_size,
                        const std::function<void(const std::vector<uint32_t>&)>& emit);

// All valid polymers of the model with size <= max_size, in canonical order
// (sorted by vertices, then labels). Supports are generated once via
// canonical-root growth: each support is grown only from its minimum vertex.
std::vector<Polymer> enumerate_polymers(const PolymerModel& model, uint32_t max_size = kNoSizeCap);

// Exact polymer partition function: sum over compatible sets Gamma with
// |Gamma| < size_cap of prod_gamma a_gamma z^{size}. The empty set
// contributes 1 (except size_cap = 0, which excludes it).
Rational xi_exact(const PolymerModel& model, const Rational& z, uint32_t size_cap = kNoSizeCap,
                  uint64_t work_budget = 1ull << 24);

struct KpReport {
    double max_ratio = 0.0;               // <= 1 certifies Xi != 0 for |z| < radius
    std::optional<Polymer> argmax;        // polymer attaining the maximum
    size_t polymer_count = 0;
};

// Kotecky-Preiss check with a(gamma) = a_coeff * size(gamma): for every
// gamma*, sum_{gamma incompatible with gamma*} e^{a(gamma)} |a_gamma| radius^{size}
// divided by a(gamma*); reports the maximum ratio over gamma*.
KpReport kp_check(const PolymerModel& model, double a_coeff, double radius);

} // namespace polycount
