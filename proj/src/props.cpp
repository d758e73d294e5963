#include "polycount/props.hpp"

#include <cmath>
#include <random>

#include "polycount/errors.hpp"
#include "polycount/numeric.hpp"
#include "polycount/random_gen.hpp"

namespace polycount {

namespace {

template <typename Real>
Real entropy_impl(const Real& x) {
    if (x == 0 || x == 1) return Real(0);
    using std::log;
    const Real log2e = Real(1) / log(Real(2));
    return (-x * log(x) - (Real(1) - x) * log(Real(1) - x)) * log2e;
}

template <typename Real>
Real margin_impl(uint32_t delta, const Real& alpha, const Real& beta) {
    const Real numerator = entropy_impl(alpha) + entropy_impl(alpha * beta);
    const Real denominator = entropy_impl(alpha) - alpha * beta * entropy_impl(Real(1) / beta);
    return Real(delta) - numerator / denominator;
}

uint32_t floor_with_tolerance(double x) {
    // floor(alpha*n) where alpha*n may sit a hair under an integer it
    // mathematically equals (e.g. alpha = 2.9/Delta scaled back up).
    const double f = std::floor(x + 1e-9);
    return f <= 0 ? 0 : static_cast<uint32_t>(f);
}

// Enumerates all size-k subsets of `pool` in lexicographic order; visit
// returns false to stop early. Returns false if stopped.
bool for_each_combination(const std::vector<uint32_t>& pool, uint32_t k,
                          const std::function<bool(const std::vector<uint32_t>&)>& visit) {
    const uint32_t m = static_cast<uint32_t>(pool.size());
    if (k > m) return true;
    std::vector<uint32_t> idx(k);
    for (uint32_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<uint32_t> subset(k);
    while (true) {
        for (uint32_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
        if (!visit(subset)) return false;
        uint32_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (uint32_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

uint64_t neighborhood_size(const BipartiteGraph& g, const std::vector<uint32_t>& subset,
                           VertexSet& scratch_mask, VertexSet& scratch_nbr) {
    scratch_mask.reset();
    scratch_nbr.reset();
    for (uint32_t v : subset) scratch_mask.set(v);
    for (uint32_t v : subset)
        for (uint32_t w : g.adjacency(v)) scratch_nbr.set(w);
    scratch_nbr -= scratch_mask;
    return scratch_nbr.count();
}

VertexSet to_set(const BipartiteGraph& g, const std::vector<uint32_t>& subset) {
    VertexSet out = g.empty_set();
    for (uint32_t v : subset) out.set(v);
    return out;
}

std::vector<uint32_t> side_pool(const BipartiteGraph& g, Side side) {
    std::vector<uint32_t> pool(g.n());
    const uint32_t base = side == Side::L ? 0 : g.n();
    for (uint32_t i = 0; i < g.n(); ++i) pool[i] = base + i;
    return pool;
}

std::vector<uint32_t> sample_subset(std::mt19937_64& engine, const std::vector<uint32_t>& pool,
                                    uint32_t k) {
    std::vector<uint32_t> draw = pool;
    for (uint32_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<uint32_t>(bounded_uniform(engine, draw.size() - i));
        std::swap(draw[i], draw[j]);
    }
    draw.resize(k);
    std::sort(draw.begin(), draw.end());
    return draw;
}

uint64_t exact_budget_cost(uint32_t n, uint32_t max_size, uint64_t cap) {
    uint64_t total = 0;
    BigInt running = 0;
    for (uint32_t k = 1; k <= max_size && k <= n; ++k) {
        running += binomial(n, k);
        if (running > cap) return cap + 1;
    }
    total = running.convert_to<uint64_t>();
    return total;
}

} // namespace

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw PreconditionError("binary_entropy: x must lie in [0,1]");
    return entropy_impl(x);
}

double expander_threshold_margin(uint32_t delta, double alpha, double beta) {
    if (!(alpha > 0.0 && beta > 1.0 && alpha < 1.0 / beta))
        throw PreconditionError("expander_threshold_margin: need 0 < alpha < 1/beta < 1");
    const double denominator = binary_entropy(alpha) - alpha * beta * binary_entropy(1.0 / beta);
    if (!(denominator > 0.0))
        throw PreconditionError("expander_threshold_margin: nonpositive denominator");
    const double f = margin_impl(delta, alpha, beta);
    if (std::fabs(f) < 0.5) {
        // The interesting margins (e.g. f(52), f(53) for the high-fugacity
        // parameters) are ~0.1; redo those at 50-digit precision.
        return margin_impl(delta, BigFloat(alpha), BigFloat(beta)).convert_to<double>();
    }
    return f;
}

PropertyVerdict is_expander(const BipartiteGraph& g, double alpha, double beta,
                            const PropertyCheckConfig& cfg) {
    const uint32_t max_size = std::min(g.n(), floor_with_tolerance(alpha * g.n()));
    PropertyVerdict verdict;
    verdict.method = cfg.mode;
    if (max_size == 0) return verdict;

    VertexSet mask = g.empty_set();
    VertexSet nbr = g.empty_set();
    auto violates = [&](const std::vector<uint32_t>& subset) {
        return static_cast<double>(neighborhood_size(g, subset, mask, nbr)) <
               beta * static_cast<double>(subset.size());
    };

    if (cfg.mode == CheckMode::Exact) {
        if (exact_budget_cost(g.n(), max_size, cfg.budget) > cfg.budget)
            throw ResourceError("is_expander: exact subset scan exceeds budget");
        for (Side side : {Side::L, Side::R}) {
            const auto pool = side_pool(g, side);
            for (uint32_t k = 1; k <= max_size; ++k) {
                const bool completed = for_each_combination(pool, k, [&](const auto& subset) {
                    if (violates(subset)) {
                        verdict.holds = false;
                        verdict.witness = to_set(g, subset);
                        return false;
                    }
                    return true;
                });
                if (!completed) return verdict;
            }
        }
        return verdict;
    }

    std::mt19937_64 engine(cfg.seed);
    for (Side side : {Side::L, Side::R}) {
        const auto pool = side_pool(g, side);
        for (uint32_t k = 1; k <= max_size; ++k) {
            for (uint32_t trial = 0; trial < cfg.samples_per_size; ++trial) {
                const auto subset = sample_subset(engine, pool, k);
                if (violates(subset)) {
                    verdict.holds = false;
                    verdict.witness = to_set(g, subset);
                    return verdict;
                }
            }
        }
    }
    return verdict;
}

PropertyVerdict has_cover_property(const BipartiteGraph& g, double a, double b,
                                   const PropertyCheckConfig& cfg) {
    if (!(a > 0.0 && a <= 1.0 && b > 0.0 && b <= 1.0))
        throw PreconditionError("has_cover_property: need a, b in (0,1]");
    PropertyVerdict verdict;
    verdict.method = cfg.mode;
    const uint32_t size = static_cast<uint32_t>(std::ceil(a * g.n() - 1e-9));
    if (size > g.n()) return verdict; // no qualifying U
    const double required = (1.0 - b) * g.n();

    VertexSet mask = g.empty_set();
    VertexSet nbr = g.empty_set();
    auto violates = [&](const std::vector<uint32_t>& subset) {
        return static_cast<double>(neighborhood_size(g, subset, mask, nbr)) <= required;
    };

    if (cfg.mode == CheckMode::Exact) {
        if (binomial(g.n(), size) > cfg.budget)
            throw ResourceError("has_cover_property: exact subset scan exceeds budget");
        for (Side side : {Side::L, Side::R}) {
            const bool completed =
                for_each_combination(side_pool(g, side), size, [&](const auto& subset) {
                    if (violates(subset)) {
                        verdict.holds = false;
                        verdict.witness = to_set(g, subset);
                        return false;
                    }
                    return true;
                });
            if (!completed) return verdict;
        }
        return verdict;
    }

    std::mt19937_64 engine(cfg.seed);
    for (Side side : {Side::L, Side::R}) {
        const auto pool = side_pool(g, side);
        for (uint32_t trial = 0; trial < cfg.samples_per_size; ++trial) {
            const auto subset = sample_subset(engine, pool, size);
            if (violates(subset)) {
                verdict.holds = false;
                verdict.witness = to_set(g, subset);
                return verdict;
            }
        }
    }
    return verdict;
}

PropertyVerdict beta_minus_one_expansion_holds(const BipartiteGraph& g, double alpha, double beta,
                                               const PropertyCheckConfig& cfg) {
    const uint32_t max_size = std::min(g.vertex_count(), floor_with_tolerance(alpha * g.n()));
    PropertyVerdict verdict;
    verdict.method = cfg.mode;
    if (max_size == 0) return verdict;

    std::vector<uint32_t> pool(g.vertex_count());
    for (uint32_t i = 0; i < g.vertex_count(); ++i) pool[i] = i;

    VertexSet mask = g.empty_set();
    VertexSet nbr = g.empty_set();
    auto violates = [&](const std::vector<uint32_t>& subset) {
        return static_cast<double>(neighborhood_size(g, subset, mask, nbr)) <
               (beta - 1.0) * static_cast<double>(subset.size());
    };

    if (cfg.mode == CheckMode::Exact) {
        if (exact_budget_cost(g.vertex_count(), max_size, cfg.budget) > cfg.budget)
            throw ResourceError("beta_minus_one_expansion: exact subset scan exceeds budget");
        for (uint32_t k = 1; k <= max_size; ++k) {
            const bool completed = for_each_combination(pool, k, [&](const auto& subset) {
                if (violates(subset)) {
                    verdict.holds = false;
                    verdict.witness = to_set(g, subset);
                    return false;
                }
                return true;
            });
            if (!completed) return verdict;
        }
        return verdict;
    }

    std::mt19937_64 engine(cfg.seed);
    for (uint32_t k = 1; k <= max_size; ++k) {
        for (uint32_t trial = 0; trial < cfg.samples_per_size; ++trial) {
            const auto subset = sample_subset(engine, pool, k);
            if (violates(subset)) {
                verdict.holds = false;
                verdict.witness = to_set(g, subset);
                return verdict;
            }
        }
    }
    return verdict;
}

RegimeParams regime_parameters(RegimeMode mode, uint32_t delta, uint32_t q, bool force) {
    if (delta < 1) throw PreconditionError("regime_parameters: delta must be >= 1");
    RegimeParams params;
    params.mode = mode;
    params.delta = delta;
    switch (mode) {
        case RegimeMode::IsHigh: {
            if (delta < 53 && !force)
                throw RegimeError("high-fugacity regime requires Delta >= 53 (use force)");
            params.zeta = 1.28;
            params.alpha = 2.9 / delta;
            params.beta = delta / (2.9 * params.zeta);
            break;
        }
        case RegimeMode::IsLow: {
            const double log_delta = std::log(static_cast<double>(delta));
            params.alpha = log_delta * log_delta / delta;
            params.beta = params.alpha > 0.0 ? 1.0 / (3.0 * params.alpha) : 0.0;
            params.lambda_l = log_delta * log_delta * log_delta * log_delta / delta;
            break;
        }
        case RegimeMode::Coloring: {
            if (q < 3) throw RegimeError("coloring regime requires q >= 3");
            const uint32_t q_hi = (q + 1) / 2;
            const double q_hi5 = std::pow(static_cast<double>(q_hi), 5.0);
            if (!force && static_cast<double>(delta) < 100.0 * q_hi5 * q_hi5)
                throw RegimeError("coloring regime requires Delta >= 100*ceil(q/2)^10 (use force)");
            params.q = q;
            params.s = 1.0 / (18.0 * q_hi5);
            params.alpha = 1.0 / std::sqrt(static_cast<double>(delta));
            params.beta = std::sqrt(static_cast<double>(delta)) / 3.0;
            break;
        }
    }
    return params;
}

} // namespace polycount
