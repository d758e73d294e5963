#pragma once

#include <cstdint>
#include <vector>

#include "polycount/graph.hpp"
#include "polycount/hardcore.hpp"
#include "polycount/numeric.hpp"
#include "polycount/polymer.hpp"
#include "polycount/series.hpp"

namespace polycount {

// Total color assignment over a declared vertex set; colors are 1-based.
struct Coloring {
    std::vector<int> assignment; // indexed by flat id over the declared vertices
};

// d_X(sigma): L-vertices colored outside X plus R-vertices colored inside X.
uint32_t deviation_distance(const BipartiteGraph& g, const Coloring& sigma,
                            const std::vector<int>& x_colors, uint32_t q);

// Colors used on at least an s-fraction of one side: {c : |omega^{-1}(c)| >= s n}.
std::vector<int> maj(const std::vector<int>& omega, double s, uint32_t n, uint32_t q);

// a_gamma for a labeled coloring polymer, via the localized extension
// product: each neighbor of the support contributes the number of palette
// colors not blocked by its labeled support-neighbors, divided by
// |X|^{|V cap L|} (q-|X|)^{|V cap R|} with V = support + N(support).
// L-support labels come from [q] \ X, R-support labels from X.
Rational coloring_weight(const BipartiteGraph& g, const std::vector<uint32_t>& support,
                         const std::vector<int>& labels, const std::vector<int>& x_colors,
                         uint32_t q);

// The model keeps a pointer to g; passing a temporary graph is rejected.
PolymerModel build_coloring_model(const BipartiteGraph& g, const std::vector<int>& x_colors,
                                  uint32_t q, uint32_t alpha_n);
PolymerModel build_coloring_model(BipartiteGraph&& g, const std::vector<int>& x_colors, uint32_t q,
                                  uint32_t alpha_n) = delete;

// |C_X(G)| = |X|^n (q-|X|)^n * Xi(1) truncated at |Gamma| < alpha_n; exact.
// Requires alpha_n >= 1.
Rational colorings_cluster_via_polymers(const BipartiteGraph& g, const std::vector<int>& x_colors,
                                        uint32_t q, uint32_t alpha_n,
                                        uint64_t work_budget = 1ull << 24);

struct Algorithm2Config {
    uint32_t n_threshold = 10;
    double c_constant = 1.01;
    Branch branch = Branch::Auto;
    bool force = false;
    bool exact = false;
    std::optional<uint32_t> alpha_n_override;
    std::optional<uint32_t> m_override;
    std::optional<double> radius_override;
    OracleBudget oracle_budget;
    uint64_t work_budget = 1ull << 24;
};

// Counting proper q-colorings: brute force below the size threshold,
// otherwise binom(q, qlo) qlo^{2n} Xi_1 (q even) or
// binom(q, qlo) (qlo qhi)^n (Xi_1 + Xi_2) (q odd), in log space.
Estimate algorithm2(const BipartiteGraph& g, uint32_t q, double eps,
                    const Algorithm2Config& cfg = {});

} // namespace polycount
