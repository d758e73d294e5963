#pragma once

#include <cstdint>
#include <optional>

#include "polycount/graph.hpp"
#include "polycount/numeric.hpp"
#include "polycount/oracle.hpp"
#include "polycount/polymer.hpp"
#include "polycount/series.hpp"

namespace polycount {

struct HardcoreParams {
    Rational lambda = 1; // fugacity, > 0
    Side side = Side::L; // the cluster side X
    uint32_t alpha_n = kNoSizeCap; // strict polymer-size cap
};

// a_gamma = lambda^{|gamma|} (lambda+1)^{-|N(support)|}; the support must lie
// inside side X and be connected in G^2.
Rational hardcore_weight(const BipartiteGraph& g, const std::vector<uint32_t>& support, Side side,
                         const Rational& lambda);

// The model keeps a pointer to g; passing a temporary graph is rejected.
PolymerModel build_hardcore_model(const BipartiteGraph& g, const HardcoreParams& params);
PolymerModel build_hardcore_model(BipartiteGraph&& g, const HardcoreParams& params) = delete;

// Z_X(G, lambda) = (lambda+1)^n * Xi(1) truncated at |Gamma| < alpha_n; exact.
Rational z_cluster_via_polymers(const BipartiteGraph& g, const HardcoreParams& params,
                                uint64_t work_budget = 1ull << 24);

enum class Branch : uint8_t { Auto, Brute, Polymer };

struct Algorithm1Config {
    uint32_t n_threshold = 24;   // brute-force below this size (heuristic)
    double c_constant = 1.01;    // stands in for the existential constant C
    Branch branch = Branch::Auto;
    bool force = false;          // bypass regime bounds
    bool exact = false;          // polymer branch via exact capped Xi
    std::optional<uint32_t> alpha_n_override;
    std::optional<uint32_t> m_override;
    std::optional<double> radius_override;
    OracleBudget oracle_budget;
    uint64_t work_budget = 1ull << 24;
};

// Counting weighted independent sets: brute force below the size threshold,
// otherwise per-side polymer estimates combined as
// (lambda+1)^n (Xi_L + Xi_R) in log space.
Estimate algorithm1(const BipartiteGraph& g, const Rational& lambda, double eps,
                    const Algorithm1Config& cfg = {});

} // namespace polycount
