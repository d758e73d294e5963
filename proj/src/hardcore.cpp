#include "polycount/hardcore.hpp"

#include <chrono>
#include <cmath>

#include "polycount/errors.hpp"
#include "polycount/props.hpp"

namespace polycount {

namespace {

double log_add_exp(double a, double b) {
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

} // namespace

Rational hardcore_weight(const BipartiteGraph& g, const std::vector<uint32_t>& support, Side side,
                         const Rational& lambda) {
    const uint32_t base = side == Side::L ? 0 : g.n();
    VertexSet nbr = g.empty_set();
    for (uint32_t v : support) {
        if (v < base || v >= base + g.n())
            throw PreconditionError("hardcore_weight: support vertex off side X");
        for (uint32_t w : g.adjacency(v)) nbr.set(w);
    }
    const auto covered = static_cast<unsigned>(nbr.count()); // N(support) is on the other side
    return rational_pow(lambda, static_cast<unsigned>(support.size())) /
           rational_pow(lambda + 1, covered);
}

PolymerModel build_hardcore_model(const BipartiteGraph& g, const HardcoreParams& params) {
    // lambda = 0 is admissible here (every candidate weighs 0, so the
    // polymer set is empty and Xi is identically 1); Algorithm 1 itself
    // demands lambda > 0.
    if (params.lambda < 0) throw PreconditionError("hardcore model: lambda must be nonnegative");
    PolymerModel model;
    model.graph = &g;
    model.universe = g.empty_set();
    const uint32_t base = params.side == Side::L ? 0 : g.n();
    for (uint32_t i = 0; i < g.n(); ++i) model.universe.set(base + i);
    model.alpha_n = params.alpha_n;
    const Rational lambda = params.lambda;
    const Side side = params.side;
    model.weight_base = [lambda, side](const BipartiteGraph& graph,
                                       const std::vector<uint32_t>& support,
                                       const std::vector<int>&) {
        return hardcore_weight(graph, support, side, lambda);
    };
    return model;
}

Rational z_cluster_via_polymers(const BipartiteGraph& g, const HardcoreParams& params,
                                uint64_t work_budget) {
    const PolymerModel model = build_hardcore_model(g, params);
    return rational_pow(params.lambda + 1, g.n()) *
           xi_exact(model, Rational(1), params.alpha_n, work_budget);
}

Estimate algorithm1(const BipartiteGraph& g, const Rational& lambda, double eps,
                    const Algorithm1Config& cfg) {
    if (lambda <= 0) throw PreconditionError("algorithm1: lambda must be positive");
    if (!(eps > 0.0)) throw PreconditionError("algorithm1: eps must be positive");
    const auto start = std::chrono::steady_clock::now();
    const uint32_t n = g.n();
    const double structural_error = std::pow(cfg.c_constant, -static_cast<double>(n));

    bool brute = cfg.branch == Branch::Brute;
    if (cfg.branch == Branch::Auto)
        brute = n <= cfg.n_threshold || eps <= 2.0 * structural_error;

    if (brute) {
        const Rational z = count_is(g, lambda, cfg.oracle_budget);
        Estimate estimate;
        estimate.method = EstimateMethod::BruteForce;
        estimate.log_value = log_rational(z).convert_to<double>();
        estimate.relative_error_bound = 0.0;
        estimate.exact_value = z;
        estimate.diagnostics.branch = "brute";
        estimate.diagnostics.certified = true;
        estimate.diagnostics.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return estimate;
    }

    // Polymer branch. Regime: lambda >= 1 is the high-fugacity setting
    // (Delta >= 53), lambda < 1 the low-fugacity one (lambda > lambda_l).
    const bool high = lambda >= 1;
    RegimeParams regime = regime_parameters(high ? RegimeMode::IsHigh : RegimeMode::IsLow,
                                            g.delta(), 0, high ? cfg.force : false);
    if (!high) {
        const double lam = BigFloat(lambda).convert_to<double>();
        if (lam <= regime.lambda_l && !cfg.force)
            throw RegimeError("algorithm1: lambda below lambda_l for the low-fugacity regime "
                              "(use force)");
    }
    const uint32_t alpha_n =
        cfg.alpha_n_override ? *cfg.alpha_n_override : strict_size_cap(regime.alpha * n);
    const double radius = cfg.radius_override ? *cfg.radius_override : (high ? 1.001 : 2.0);

    HardcoreParams left{lambda, Side::L, alpha_n};
    HardcoreParams right{lambda, Side::R, alpha_n};

    Estimate estimate;
    estimate.method = EstimateMethod::PolymerPipeline;
    estimate.diagnostics.branch = "polymer";
    estimate.diagnostics.radius = radius;

    const double log_prefactor = static_cast<double>(n) * log_rational(lambda + 1).convert_to<double>();

    if (cfg.exact) {
        // Exact capped pipeline: (lambda+1)^n (Xi_L + Xi_R) with |Gamma| < alpha_n.
        const PolymerModel model_l = build_hardcore_model(g, left);
        const PolymerModel model_r = build_hardcore_model(g, right);
        const Rational xi_l = xi_exact(model_l, Rational(1), alpha_n, cfg.work_budget);
        const Rational xi_r = xi_exact(model_r, Rational(1), alpha_n, cfg.work_budget);
        const Rational z = rational_pow(lambda + 1, n) * (xi_l + xi_r);
        estimate.exact_value = z;
        estimate.log_value = log_rational(z).convert_to<double>();
        estimate.relative_error_bound = 0.0; // exact value of the pipeline identity
        estimate.diagnostics.branch = "polymer-exact";
        estimate.diagnostics.certified = false;
    } else {
        const double eps_prime = eps - structural_error;
        if (!cfg.m_override && !(eps_prime > 0.0))
            throw PreconditionError("algorithm1: eps too small for the polymer branch at this n");
        const PolymerModel model_l = build_hardcore_model(g, left);
        const PolymerModel model_r = build_hardcore_model(g, right);
        const Estimate est_l =
            estimate_log_xi(model_l, eps_prime, radius, cfg.m_override, cfg.work_budget);
        const Estimate est_r =
            estimate_log_xi(model_r, eps_prime, radius, cfg.m_override, cfg.work_budget);
        estimate.log_value = log_prefactor + log_add_exp(est_l.log_value, est_r.log_value);
        // Conservative: per-side bounds added, plus the structural term.
        estimate.relative_error_bound =
            est_l.relative_error_bound + est_r.relative_error_bound + structural_error;
        estimate.diagnostics.truncation_order = est_l.diagnostics.truncation_order;
        estimate.diagnostics.truncation_overridden = cfg.m_override.has_value();
        estimate.diagnostics.polymer_count =
            est_l.diagnostics.polymer_count + est_r.diagnostics.polymer_count;
        estimate.diagnostics.degree_bound = est_l.diagnostics.degree_bound;
        estimate.diagnostics.certified =
            !cfg.force && !cfg.m_override && !cfg.alpha_n_override && !cfg.radius_override;
    }
    estimate.diagnostics.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return estimate;
}

} // namespace polycount
