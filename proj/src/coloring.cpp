#include "polycount/coloring.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "polycount/errors.hpp"
#include "polycount/oracle.hpp"
#include "polycount/props.hpp"

namespace polycount {

namespace {

void validate_x(const std::vector<int>& x_colors, uint32_t q) {
    if (q < 2) throw PreconditionError("coloring model: q must be >= 2");
    if (x_colors.empty() || x_colors.size() >= q)
        throw PreconditionError("coloring model: X must satisfy empty < X < [q]");
    std::vector<bool> seen(q + 1, false);
    for (int c : x_colors) {
        if (c < 1 || static_cast<uint32_t>(c) > q || seen[c])
            throw PreconditionError("coloring model: X must be a duplicate-free subset of [q]");
        seen[c] = true;
    }
}

uint32_t color_mask(const std::vector<int>& colors) {
    uint32_t mask = 0;
    for (int c : colors) mask |= 1u << (c - 1);
    return mask;
}

double log_add_exp(double a, double b) {
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

} // namespace

uint32_t deviation_distance(const BipartiteGraph& g, const Coloring& sigma,
                            const std::vector<int>& x_colors, uint32_t q) {
    validate_x(x_colors, q);
    if (sigma.assignment.size() != g.vertex_count())
        throw PreconditionError("deviation_distance: coloring must be total on L and R");
    const uint32_t x_mask = color_mask(x_colors);
    uint32_t deviation = 0;
    for (uint32_t l = 0; l < g.n(); ++l)
        if (!((x_mask >> (sigma.assignment[l] - 1)) & 1u)) ++deviation;
    for (uint32_t r = g.n(); r < g.vertex_count(); ++r)
        if ((x_mask >> (sigma.assignment[r] - 1)) & 1u) ++deviation;
    return deviation;
}

std::vector<int> maj(const std::vector<int>& omega, double s, uint32_t n, uint32_t q) {
    if (omega.size() != n) throw PreconditionError("maj: omega must be total on one side");
    std::vector<uint32_t> counts(q + 1, 0);
    for (int c : omega) {
        if (c < 1 || static_cast<uint32_t>(c) > q)
            throw PreconditionError("maj: color out of range");
        ++counts[c];
    }
    std::vector<int> result;
    for (uint32_t c = 1; c <= q; ++c)
        if (static_cast<double>(counts[c]) >= s * n) result.push_back(static_cast<int>(c));
    return result;
}

Rational coloring_weight(const BipartiteGraph& g, const std::vector<uint32_t>& support,
                         const std::vector<int>& labels, const std::vector<int>& x_colors,
                         uint32_t q) {
    validate_x(x_colors, q);
    if (labels.size() != support.size())
        throw PreconditionError("coloring_weight: need one label per support vertex");
    const uint32_t x_mask = color_mask(x_colors);
    const uint32_t full_mask = q == 32 ? ~0u : (1u << q) - 1;
    const uint32_t x_size = static_cast<uint32_t>(x_colors.size());

    VertexSet support_mask = g.empty_set();
    std::vector<uint32_t> label_of(g.vertex_count(), 0);
    for (size_t i = 0; i < support.size(); ++i) {
        const uint32_t v = support[i];
        const int c = labels[i];
        if (c < 1 || static_cast<uint32_t>(c) > q)
            throw PreconditionError("coloring_weight: label out of range");
        const bool in_x = (x_mask >> (c - 1)) & 1u;
        // Deviation labels: [q] \ X on the left side, X on the right side.
        if (v < g.n() ? in_x : !in_x)
            throw PreconditionError("coloring_weight: label off its side's domain");
        support_mask.set(v);
        label_of[v] = 1u << (c - 1);
    }

    VertexSet boundary = g.empty_set();
    for (uint32_t v : support)
        for (uint32_t w : g.adjacency(v)) boundary.set(w);
    boundary -= support_mask;

    BigInt numerator = 1;
    uint32_t boundary_l = 0;
    uint32_t boundary_r = 0;
    for (auto w = boundary.find_first(); w != VertexSet::npos; w = boundary.find_next(w)) {
        const bool left = w < g.n();
        left ? ++boundary_l : ++boundary_r;
        uint32_t blocked = 0;
        for (uint32_t x : g.adjacency(static_cast<uint32_t>(w)))
            if (support_mask.test(x)) blocked |= label_of[x];
        const uint32_t palette = left ? x_mask : (full_mask & ~x_mask);
        numerator *= std::popcount(palette & ~blocked);
        if (numerator == 0) return 0;
    }

    uint32_t support_l = 0;
    for (uint32_t v : support)
        if (v < g.n()) ++support_l;
    const uint32_t support_r = static_cast<uint32_t>(support.size()) - support_l;

    const BigInt denominator = boost::multiprecision::pow(BigInt(x_size), support_l + boundary_l) *
                               boost::multiprecision::pow(BigInt(q - x_size), support_r + boundary_r);
    return Rational(numerator, denominator);
}

PolymerModel build_coloring_model(const BipartiteGraph& g, const std::vector<int>& x_colors,
                                  uint32_t q, uint32_t alpha_n) {
    validate_x(x_colors, q);
    PolymerModel model;
    model.graph = &g;
    model.universe = g.empty_set();
    model.universe.set();
    model.alpha_n = alpha_n;

    std::vector<int> complement;
    for (uint32_t c = 1; c <= q; ++c)
        if (std::find(x_colors.begin(), x_colors.end(), static_cast<int>(c)) == x_colors.end())
            complement.push_back(static_cast<int>(c));

    model.label_domain.assign(g.vertex_count(), {});
    model.extension_domain.assign(g.vertex_count(), {});
    for (uint32_t v = 0; v < g.vertex_count(); ++v) {
        const bool left = v < g.n();
        model.label_domain[v] = left ? complement : x_colors;
        model.extension_domain[v] = left ? x_colors : complement;
    }

    const std::vector<int> x = x_colors;
    model.weight_base = [x, q](const BipartiteGraph& graph, const std::vector<uint32_t>& support,
                               const std::vector<int>& labels) {
        return coloring_weight(graph, support, labels, x, q);
    };
    return model;
}

Rational colorings_cluster_via_polymers(const BipartiteGraph& g, const std::vector<int>& x_colors,
                                        uint32_t q, uint32_t alpha_n, uint64_t work_budget) {
    if (alpha_n < 1)
        throw PreconditionError("colorings_cluster_via_polymers: alpha_n must be >= 1");
    const PolymerModel model = build_coloring_model(g, x_colors, q, alpha_n);
    const auto x_size = static_cast<unsigned>(x_colors.size());
    return rational_pow(Rational(x_size), g.n()) * rational_pow(Rational(q - x_size), g.n()) *
           xi_exact(model, Rational(1), alpha_n, work_budget);
}

Estimate algorithm2(const BipartiteGraph& g, uint32_t q, double eps, const Algorithm2Config& cfg) {
    if (q < 3) throw PreconditionError("algorithm2: q must be >= 3");
    if (!(eps > 0.0)) throw PreconditionError("algorithm2: eps must be positive");
    const auto start = std::chrono::steady_clock::now();
    const uint32_t n = g.n();
    const uint32_t q_lo = q / 2;
    const uint32_t q_hi = (q + 1) / 2;
    const double structural_error = std::pow(cfg.c_constant, -static_cast<double>(n));

    bool brute = cfg.branch == Branch::Brute;
    if (cfg.branch == Branch::Auto)
        brute = n <= cfg.n_threshold || eps <= 2.0 * structural_error;

    if (brute) {
        const BigInt z = count_colorings(g, q, cfg.oracle_budget);
        Estimate estimate;
        estimate.method = EstimateMethod::BruteForce;
        estimate.log_value = log_rational(Rational(z)).convert_to<double>();
        estimate.relative_error_bound = 0.0;
        estimate.exact_value = Rational(z);
        estimate.diagnostics.branch = "brute";
        estimate.diagnostics.certified = true;
        estimate.diagnostics.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return estimate;
    }

    // Regime bound Delta >= 100 qhi^10 (force bypasses).
    regime_parameters(RegimeMode::Coloring, g.delta(), q, cfg.force);
    const RegimeParams regime = regime_parameters(RegimeMode::Coloring, g.delta(), q, true);
    const uint32_t alpha_n =
        cfg.alpha_n_override ? *cfg.alpha_n_override : strict_size_cap(regime.alpha * n);
    const double radius = cfg.radius_override ? *cfg.radius_override : 2.0;

    std::vector<int> x_lo(q_lo);
    for (uint32_t c = 0; c < q_lo; ++c) x_lo[c] = static_cast<int>(c + 1);
    std::vector<int> x_hi(q_hi);
    for (uint32_t c = 0; c < q_hi; ++c) x_hi[c] = static_cast<int>(c + 1);
    const bool odd = q % 2 == 1;

    Estimate estimate;
    estimate.method = EstimateMethod::PolymerPipeline;
    estimate.diagnostics.radius = radius;

    const BigInt choose = binomial(q, q_lo);

    if (cfg.exact) {
        Rational total = colorings_cluster_via_polymers(g, x_lo, q, alpha_n, cfg.work_budget);
        if (odd) total += colorings_cluster_via_polymers(g, x_hi, q, alpha_n, cfg.work_budget);
        const Rational z = Rational(choose) * total;
        estimate.exact_value = z;
        estimate.log_value = log_rational(z).convert_to<double>();
        estimate.relative_error_bound = 0.0;
        estimate.diagnostics.branch = odd ? "polymer-exact(q-odd)" : "polymer-exact(q-even)";
        estimate.diagnostics.certified = false;
    } else {
        const double eps_prime = eps - structural_error;
        if (!cfg.m_override && !(eps_prime > 0.0))
            throw PreconditionError("algorithm2: eps too small for the polymer branch at this n");
        const PolymerModel model_lo = build_coloring_model(g, x_lo, q, alpha_n);
        const Estimate est_lo =
            estimate_log_xi(model_lo, eps_prime, radius, cfg.m_override, cfg.work_budget);
        // log prefactor: binom(q, qlo) * |X|^n (q-|X|)^n.
        const double log_prefactor =
            log_rational(Rational(choose)).convert_to<double>() +
            static_cast<double>(n) * std::log(static_cast<double>(q_lo) * q_hi);
        double log_xi_sum = est_lo.log_value;
        double error = est_lo.relative_error_bound;
        size_t polymer_count = est_lo.diagnostics.polymer_count;
        if (odd) {
            const PolymerModel model_hi = build_coloring_model(g, x_hi, q, alpha_n);
            const Estimate est_hi =
                estimate_log_xi(model_hi, eps_prime, radius, cfg.m_override, cfg.work_budget);
            log_xi_sum = log_add_exp(est_lo.log_value, est_hi.log_value);
            error += est_hi.relative_error_bound;
            polymer_count += est_hi.diagnostics.polymer_count;
        }
        estimate.log_value = log_prefactor + log_xi_sum;
        estimate.relative_error_bound = error + structural_error;
        estimate.diagnostics.branch = odd ? "polymer(q-odd)" : "polymer(q-even)";
        estimate.diagnostics.truncation_order = est_lo.diagnostics.truncation_order;
        estimate.diagnostics.truncation_overridden = cfg.m_override.has_value();
        estimate.diagnostics.polymer_count = polymer_count;
        estimate.diagnostics.degree_bound = est_lo.diagnostics.degree_bound;
        estimate.diagnostics.certified =
            !cfg.force && !cfg.m_override && !cfg.alpha_n_override && !cfg.radius_override;
    }
    estimate.diagnostics.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return estimate;
}

} // namespace polycount
