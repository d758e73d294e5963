#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polycount/numeric.hpp"
#include "polycount/polymer.hpp"

namespace polycount {

// Finite coefficient sequence c_0..c_m of a formal power series in z.
struct Series {
    std::vector<Rational> coefficients;

    uint32_t order() const { return static_cast<uint32_t>(coefficients.size()) - 1; }
    const Rational& operator[](size_t k) const { return coefficients[k]; }
};

enum class EstimateMethod : uint8_t { BruteForce, PolymerPipeline };

struct EstimateDiagnostics {
    uint32_t truncation_order = 0;
    bool truncation_overridden = false;
    size_t polymer_count = 0;
    uint32_t degree_bound = 0;
    double radius = 0.0;
    std::string branch;       // which Algorithm branch ran
    bool certified = false;   // error bound backed by the stated regime
    double elapsed_seconds = 0.0;
};

// A value carried in natural-log space with a relative-error bound. When the
// whole path was exact arithmetic, the exact rational is carried alongside.
struct Estimate {
    double log_value = 0.0;
    double relative_error_bound = 0.0;
    EstimateMethod method = EstimateMethod::BruteForce;
    std::optional<Rational> exact_value;
    EstimateDiagnostics diagnostics;
};

// c_0..c_m of Xi(z): c_k = sum over compatible Gamma with |Gamma| = k of
// prod a_gamma, by depth-first extension over canonically sorted polymers.
Series xi_coefficients(const PolymerModel& model, uint32_t m, uint64_t work_budget = 1ull << 24);

// p_1..p_m of log Xi via the Newton recurrence
// k p_k = k c_k - sum_{j=1}^{k-1} j p_j c_{k-j}; requires c_0 = 1.
// Returned series has coefficient index k at position k (p_0 = 0).
Series log_series(const Series& xi);

// Inverse: exp of a log series (e_0 = 1, k e_k = sum_{j<=k} j p_j e_{k-j}),
// truncated at the same order. exp(log_series(xi)) reproduces xi exactly.
Series exp_series(const Series& p);

// Tail bound after truncating the log series at order m, valid whenever
// Xi has no zeros of modulus < radius: |p_k| <= degree radius^{-k} / k, so
// the tail is at most degree radius^{-(m+1)} / ((m+1)(1 - 1/radius)).
double log_series_tail_bound(uint32_t degree, double radius, uint32_t m);

// Smallest m whose tail bound is <= eps. Requires radius > 1.
uint32_t truncation_order(uint32_t degree, double radius, double eps);

// Truncated cluster expansion of ln Xi(1): sums p_1..p_m at z = 1 with the
// tail bound above as the reported error. A model with no polymers has
// Xi identically 1 and error 0.
Estimate estimate_log_xi(const PolymerModel& model, double eps, double radius,
                         std::optional<uint32_t> m_override = std::nullopt,
                         uint64_t work_budget = 1ull << 24);

} // namespace polycount
