#pragma once

#include <cstdint>
#include <optional>

#include "polycount/graph.hpp"

namespace polycount {

enum class RegimeMode : uint8_t { IsHigh, IsLow, Coloring };

// Parameter triples from the three algorithmic regimes:
//   IsHigh:   zeta = 1.28, alpha = 2.9/Delta, beta = Delta/(2.9 zeta)
//   IsLow:    alpha = (ln Delta)^2/Delta, beta = 1/(3 alpha),
//             lambda_l = (ln Delta)^4/Delta
//   Coloring: s = 1/(18 qbar^5), alpha = Delta^{-1/2}, beta = Delta^{1/2}/3
struct RegimeParams {
    RegimeMode mode = RegimeMode::IsHigh;
    uint32_t delta = 0;
    uint32_t q = 0; // coloring only
    double zeta = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double s = 0.0;
    double lambda_l = 0.0;
};

enum class CheckMode : uint8_t { Exact, Sampled };

struct PropertyCheckConfig {
    CheckMode mode = CheckMode::Exact;
    uint64_t budget = 1ull << 24;  // exact-mode subset budget
    uint32_t samples_per_size = 1000;
    uint64_t seed = 0;
};

struct PropertyVerdict {
    bool holds = true;
    std::optional<VertexSet> witness; // present whenever an exact check fails
    CheckMode method = CheckMode::Exact;
};

// H(x) = -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0.
double binary_entropy(double x);

// f(Delta) = Delta - (H(alpha) + H(alpha beta)) / (H(alpha) - alpha beta H(1/beta)).
// Positive iff the expander-probability threshold holds for these parameters.
// Requires 0 < alpha < 1/beta < 1 and a positive denominator. Values near
// zero are recomputed at extended precision before being returned.
double expander_threshold_margin(uint32_t delta, double alpha, double beta);

// (alpha,beta)-expander: every one-side U with |U| <= alpha n has
// |N(U)| >= beta |U|.
PropertyVerdict is_expander(const BipartiteGraph& g, double alpha, double beta,
                            const PropertyCheckConfig& cfg);

// (a,b)-cover property: every one-side U with |U| >= a n has
// |N(U)| > (1-b) n. Exact mode only tests |U| = ceil(a n); N is monotone
// under inclusion so the verdict is unchanged.
PropertyVerdict has_cover_property(const BipartiteGraph& g, double a, double b,
                                   const PropertyCheckConfig& cfg);

// |N(U)| >= (beta-1)|U| for all mixed-side U with |U| <= alpha n.
PropertyVerdict beta_minus_one_expansion_holds(const BipartiteGraph& g, double alpha, double beta,
                                               const PropertyCheckConfig& cfg);

// Populates the regime formulas above. The certified regimes demand
// Delta >= 53 (IsHigh) and q >= 3, Delta >= 100 qbar^10 (Coloring); `force`
// bypasses those bounds for desk-scale experiments.
RegimeParams regime_parameters(RegimeMode mode, uint32_t delta, uint32_t q = 0, bool force = false);

} // namespace polycount
