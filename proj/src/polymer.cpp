#include "polycount/polymer.hpp"

#include <algorithm>
#include <cmath>

#include "polycount/errors.hpp"

namespace polycount {

bool compatible(const Polymer& g1, const Polymer& g2) {
    return !g1.support.intersects(g2.square_closure);
}

uint32_t strict_size_cap(double real_bound) {
    const double c = std::ceil(real_bound - 1e-9);
    return c <= 0.0 ? 0 : static_cast<uint32_t>(c);
}

namespace {

// Connected-subgraph growth in G^2. `marked` covers everything already in
// the set, queued as a candidate, or banned by an earlier sibling branch;
// a vertex chosen at branch i stays marked for branches > i, which is what
// makes every connected superset appear exactly once.
void grow_supports(const BipartiteGraph& g, const VertexSet& universe, uint32_t max_size,
                   std::vector<uint32_t>& current, const std::vector<uint32_t>& candidates,
                   const VertexSet& marked,
                   const std::function<void(const std::vector<uint32_t>&)>& emit) {
    emit(current);
    if (current.size() >= max_size) return;
    for (size_t i = 0; i < candidates.size(); ++i) {
        const uint32_t u = candidates[i];
        std::vector<uint32_t> next(candidates.begin() + static_cast<long>(i) + 1,
                                   candidates.end());
        VertexSet next_marked = marked;
        for (uint32_t w : g.square_adjacency(u)) {
            if (universe.test(w) && !next_marked.test(w)) {
                next_marked.set(w);
                next.push_back(w);
            }
        }
        current.push_back(u);
        grow_supports(g, universe, max_size, current, next, next_marked, emit);
        current.pop_back();
    }
}

VertexSet make_mask(const BipartiteGraph& g, const std::vector<uint32_t>& vertices) {
    VertexSet mask = g.empty_set();
    for (uint32_t v : vertices) mask.set(v);
    return mask;
}

Polymer make_polymer(const BipartiteGraph& g, const std::vector<uint32_t>& vertices,
                     std::vector<int> labels, Rational weight) {
    Polymer p;
    p.support = make_mask(g, vertices);
    p.neighborhood = g.empty_set();
    p.square_closure = p.support;
    for (uint32_t v : vertices) {
        for (uint32_t w : g.adjacency(v)) p.neighborhood.set(w);
        for (uint32_t w : g.square_adjacency(v)) p.square_closure.set(w);
    }
    p.neighborhood -= p.support;
    p.vertices = vertices;
    p.labels = std::move(labels);
    p.weight = std::move(weight);
    return p;
}

} // namespace

void enumerate_supports(const BipartiteGraph& g, const VertexSet& universe, uint32_t root,
                        uint32_t max_size,
                        const std::function<void(const std::vector<uint32_t>&)>& emit) {
    if (root >= g.vertex_count() || !universe.test(root))
        throw PreconditionError("enumerate_supports: root not in universe");
    if (max_size == 0) return;
    std::vector<uint32_t> current{root};
    VertexSet marked(g.vertex_count());
    marked.set(root);
    std::vector<uint32_t> candidates;
    for (uint32_t w : g.square_adjacency(root)) {
        if (universe.test(w) && !marked.test(w)) {
            marked.set(w);
            candidates.push_back(w);
        }
    }
    grow_supports(g, universe, max_size, current, candidates, marked, emit);
}

namespace {

// Labeled candidates are pruned as soon as some off-support neighbor whose
// support-neighbors are all assigned has every extension color blocked.
struct LabelAssigner {
    const BipartiteGraph& g;
    const PolymerModel& model;
    const std::vector<uint32_t>& support;
    const VertexSet& support_mask;
    const std::vector<uint32_t>& position; // flat id -> index in support
    std::vector<int>& labels;
    std::vector<Polymer>& out;

    void assign(uint32_t at) {
        if (at == support.size()) {
            Rational w = model.weight_base(g, support, labels);
            if (w != 0) out.push_back(make_polymer(g, support, labels, std::move(w)));
            return;
        }
        const uint32_t v = support[at];
        for (int candidate : model.label_domain[v]) {
            labels[at] = candidate;
            if (viable_after(at)) assign(at + 1);
        }
    }

    bool viable_after(uint32_t at) const {
        if (model.extension_domain.empty()) return true;
        const uint32_t v = support[at];
        for (uint32_t w : g.adjacency(v)) {
            if (support_mask.test(w)) continue;
            bool all_assigned = true;
            for (uint32_t x : g.adjacency(w)) {
                if (support_mask.test(x) && position[x] > at) {
                    all_assigned = false;
                    break;
                }
            }
            if (!all_assigned) continue;
            bool free_color = false;
            for (int c : model.extension_domain[w]) {
                bool blocked = false;
                for (uint32_t x : g.adjacency(w)) {
                    if (support_mask.test(x) && labels[position[x]] == c) {
                        blocked = true;
                        break;
                    }
                }
                if (!blocked) {
                    free_color = true;
                    break;
                }
            }
            if (!free_color) return false;
        }
        return true;
    }
};

} // namespace

std::vector<Polymer> enumerate_polymers(const PolymerModel& model, uint32_t max_size) {
    const BipartiteGraph& g = *model.graph;
    uint32_t size_cap = max_size;
    if (model.alpha_n != kNoSizeCap)
        size_cap = std::min(size_cap, model.alpha_n == 0 ? 0 : model.alpha_n - 1);
    std::vector<Polymer> polymers;
    if (size_cap == 0) return polymers;

    const bool labeled = !model.label_domain.empty();
    std::vector<uint32_t> sorted;
    std::vector<int> labels;
    std::vector<uint32_t> position(g.vertex_count(), 0);
    auto visit_support = [&](const std::vector<uint32_t>& support) {
        sorted.assign(support.begin(), support.end());
        std::sort(sorted.begin(), sorted.end());
        if (!labeled) {
            Rational w = model.weight_base(g, sorted, {});
            if (w != 0) polymers.push_back(make_polymer(g, sorted, {}, std::move(w)));
            return;
        }
        const VertexSet support_mask = make_mask(g, sorted);
        for (uint32_t i = 0; i < sorted.size(); ++i) position[sorted[i]] = i;
        labels.assign(sorted.size(), 0);
        LabelAssigner assigner{g, model, sorted, support_mask, position, labels, polymers};
        assigner.assign(0);
    };

    for (auto root = model.universe.find_first(); root != VertexSet::npos;
         root = model.universe.find_next(root)) {
        // Supports are grown only from their minimum vertex: restricting the
        // universe to ids >= root makes root that minimum.
        VertexSet tail = model.universe;
        for (auto v = tail.find_first(); v != VertexSet::npos && v < root; v = tail.find_next(v))
            tail.reset(v);
        enumerate_supports(g, tail, static_cast<uint32_t>(root), size_cap, visit_support);
    }

    std::sort(polymers.begin(), polymers.end(), [](const Polymer& a, const Polymer& b) {
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.labels < b.labels;
    });
    return polymers;
}

Rational xi_exact(const PolymerModel& model, const Rational& z, uint32_t size_cap,
                  uint64_t work_budget) {
    if (size_cap == 0) return 0; // the sum over |Gamma| < 0 has no terms
    const uint32_t polymer_size_cap = size_cap == kNoSizeCap ? kNoSizeCap : size_cap - 1;
    const auto polymers = enumerate_polymers(model, polymer_size_cap);

    std::vector<Rational> z_pow(model.degree_bound() + 1);
    z_pow[0] = 1;
    for (size_t k = 1; k < z_pow.size(); ++k) z_pow[k] = z_pow[k - 1] * z;

    uint64_t work = 0;
    Rational total = 0;
    VertexSet conflict = model.graph->empty_set();
    auto rec = [&](auto&& self, size_t start, const Rational& product, uint32_t used) -> void {
        if (++work > work_budget) throw ResourceError("xi_exact: work budget exceeded");
        total += product;
        for (size_t j = start; j < polymers.size(); ++j) {
            const Polymer& p = polymers[j];
            if (size_cap != kNoSizeCap && used + p.size() >= size_cap) continue;
            if (p.support.intersects(conflict)) continue;
            const VertexSet saved = conflict;
            conflict |= p.square_closure;
            self(self, j + 1, product * p.weight * z_pow[p.size()], used + p.size());
            conflict = saved;
        }
    };
    rec(rec, 0, Rational(1), 0);
    return total;
}

KpReport kp_check(const PolymerModel& model, double a_coeff, double radius) {
    if (!(a_coeff > 0.0)) throw PreconditionError("kp_check: a_coeff must be positive");
    if (!(radius > 0.0)) throw PreconditionError("kp_check: radius must be positive");
    const auto polymers = enumerate_polymers(model);
    KpReport report;
    report.polymer_count = polymers.size();
    if (polymers.empty()) return report; // vacuous pass

    std::vector<double> term(polymers.size());
    for (size_t i = 0; i < polymers.size(); ++i) {
        const double magnitude =
            boost::multiprecision::abs(polymers[i].weight).convert_to<double>();
        term[i] = std::exp(a_coeff * polymers[i].size()) * magnitude *
                  std::pow(radius, polymers[i].size());
    }
    for (size_t i = 0; i < polymers.size(); ++i) {
        double sum = 0.0;
        for (size_t j = 0; j < polymers.size(); ++j)
            if (!compatible(polymers[i], polymers[j])) sum += term[j];
        const double ratio = sum / (a_coeff * polymers[i].size());
        if (ratio > report.max_ratio) {
            report.max_ratio = ratio;
            report.argmax = polymers[i];
        }
    }
    return report;
}

} // namespace polycount
