#include "polycount/series.hpp"

#include <chrono>
#include <cmath>

#include "polycount/errors.hpp"

namespace polycount {

Series xi_coefficients(const PolymerModel& model, uint32_t m, uint64_t work_budget) {
    const auto polymers = enumerate_polymers(model, m);
    Series series;
    series.coefficients.assign(m + 1, Rational(0));
    series.coefficients[0] = 1;

    uint64_t work = 0;
    VertexSet conflict = model.graph->empty_set();
    auto rec = [&](auto&& self, size_t start, const Rational& product, uint32_t used) -> void {
        if (++work > work_budget) throw ResourceError("xi_coefficients: work budget exceeded");
        for (size_t j = start; j < polymers.size(); ++j) {
            const Polymer& p = polymers[j];
            if (used + p.size() > m) continue;
            if (p.support.intersects(conflict)) continue;
            const Rational extended = product * p.weight;
            series.coefficients[used + p.size()] += extended;
            const VertexSet saved = conflict;
            conflict |= p.square_closure;
            self(self, j + 1, extended, used + p.size());
            conflict = saved;
        }
    };
    rec(rec, 0, Rational(1), 0);
    return series;
}

Series log_series(const Series& xi) {
    if (xi.coefficients.empty() || xi.coefficients[0] != 1)
        throw PreconditionError("log_series: series must have c_0 = 1");
    const uint32_t m = xi.order();
    Series p;
    p.coefficients.assign(m + 1, Rational(0));
    for (uint32_t k = 1; k <= m; ++k) {
        Rational acc = Rational(k) * xi.coefficients[k];
        for (uint32_t j = 1; j < k; ++j)
            acc -= Rational(j) * p.coefficients[j] * xi.coefficients[k - j];
        p.coefficients[k] = acc / k;
    }
    return p;
}

Series exp_series(const Series& p) {
    const uint32_t m = p.order();
    Series e;
    e.coefficients.assign(m + 1, Rational(0));
    e.coefficients[0] = 1;
    for (uint32_t k = 1; k <= m; ++k) {
        Rational acc = 0;
        for (uint32_t j = 1; j <= k; ++j)
            acc += Rational(j) * p.coefficients[j] * e.coefficients[k - j];
        e.coefficients[k] = acc / k;
    }
    return e;
}

double log_series_tail_bound(uint32_t degree, double radius, uint32_t m) {
    if (!(radius > 1.0)) throw PreconditionError("log_series_tail_bound: radius must exceed 1");
    if (degree == 0) return 0.0;
    return degree * std::pow(radius, -static_cast<double>(m + 1)) /
           ((m + 1) * (1.0 - 1.0 / radius));
}

uint32_t truncation_order(uint32_t degree, double radius, double eps) {
    if (!(radius > 1.0)) throw PreconditionError("truncation_order: radius must exceed 1");
    if (!(eps > 0.0)) throw PreconditionError("truncation_order: eps must be positive");
    uint32_t m = 0;
    while (log_series_tail_bound(degree, radius, m) > eps) ++m;
    return m;
}

Estimate estimate_log_xi(const PolymerModel& model, double eps, double radius,
                         std::optional<uint32_t> m_override, uint64_t work_budget) {
    const auto start = std::chrono::steady_clock::now();
    const uint32_t degree = model.degree_bound();
    const uint32_t m = m_override ? *m_override : truncation_order(degree, radius, eps);

    const Series xi = xi_coefficients(model, m, work_budget);
    const Series p = log_series(xi);

    Rational partial_sum = 0;
    for (uint32_t k = 1; k <= m; ++k) partial_sum += p.coefficients[k];

    size_t polymer_count = enumerate_polymers(model, m).size();
    // Distinguish "Xi identically 1" (no polymers at all, zero error) from a
    // truncation order below the smallest polymer size.
    const bool xi_trivial = polymer_count == 0 && enumerate_polymers(model).empty();

    Estimate estimate;
    estimate.method = EstimateMethod::PolymerPipeline;
    // The truncated log series evaluated at z = 1 is the partial sum itself.
    estimate.log_value = BigFloat(partial_sum).convert_to<double>();
    estimate.relative_error_bound = xi_trivial ? 0.0 : log_series_tail_bound(degree, radius, m);
    estimate.diagnostics.truncation_order = m;
    estimate.diagnostics.truncation_overridden = m_override.has_value();
    estimate.diagnostics.polymer_count = polymer_count;
    estimate.diagnostics.degree_bound = degree;
    estimate.diagnostics.radius = radius;
    estimate.diagnostics.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return estimate;
}

} // namespace polycount
