#include "polycount/harness.hpp"

#include <cmath>
#include <future>
#include <sstream>

#include "polycount/errors.hpp"
#include "polycount/random_gen.hpp"

namespace polycount {

std::string format_log(double value) {
    std::ostringstream out;
    out.precision(15);
    out << value;
    return out.str();
}

Json vertex_set_to_json(const BipartiteGraph& g, const VertexSet& set) {
    Json out = Json::array();
    for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v)) {
        const Vertex vertex = g.vertex(static_cast<uint32_t>(v));
        out.push_back((vertex.side == Side::L ? "L" : "R") + std::to_string(vertex.index));
    }
    return out;
}

Json estimate_to_json(const Estimate& estimate) {
    Json out;
    out["log_value"] = format_log(estimate.log_value);
    out["relative_error_bound"] = format_log(estimate.relative_error_bound);
    out["method"] =
        estimate.method == EstimateMethod::BruteForce ? "brute-force" : "polymer-pipeline";
    if (estimate.exact_value) out["exact_value"] = rational_to_string(*estimate.exact_value);
    Json diag;
    diag["branch"] = estimate.diagnostics.branch;
    diag["truncation_order"] = estimate.diagnostics.truncation_order;
    diag["truncation_overridden"] = estimate.diagnostics.truncation_overridden;
    diag["polymer_count"] = estimate.diagnostics.polymer_count;
    diag["degree_bound"] = estimate.diagnostics.degree_bound;
    diag["radius"] = estimate.diagnostics.radius;
    diag["certified"] = estimate.diagnostics.certified;
    out["diagnostics"] = diag;
    Json timings;
    timings["elapsed_seconds"] = estimate.diagnostics.elapsed_seconds;
    out["timings"] = timings;
    return out;
}

Json verdict_to_json(const PropertyVerdict& verdict, const BipartiteGraph& g) {
    Json out;
    out["holds"] = verdict.holds;
    out["method"] = verdict.method == CheckMode::Exact ? "exact" : "sampled";
    if (verdict.method == CheckMode::Sampled) out["proof"] = false; // absence of violation only
    if (verdict.witness) out["witness"] = vertex_set_to_json(g, *verdict.witness);
    return out;
}

Json graph_summary(const BipartiteGraph& g) {
    Json out;
    out["n"] = g.n();
    out["delta"] = g.delta();
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(g.fingerprint()));
    out["fingerprint"] = std::string(buffer);
    return out;
}

namespace {

Json config_echo(const ExperimentConfig& cfg, uint64_t seed) {
    Json out;
    out["n"] = cfg.n;
    out["delta"] = cfg.delta;
    out["seed"] = seed;
    switch (cfg.count) {
        case CountKind::None: out["count"] = "none"; break;
        case CountKind::IndependentSets:
            out["count"] = "independent-sets";
            out["lambda"] = rational_to_string(cfg.lambda);
            break;
        case CountKind::Colorings:
            out["count"] = "colorings";
            out["q"] = cfg.q;
            break;
    }
    if (cfg.count != CountKind::None) {
        out["eps"] = cfg.eps;
        out["force"] = cfg.force;
        out["branch"] = cfg.branch == Branch::Auto    ? "auto"
                        : cfg.branch == Branch::Brute ? "brute"
                                                      : "polymer";
    }
    if (cfg.props != PropsKind::None) {
        out["props_mode"] = cfg.props == PropsKind::Exact ? "exact" : "sampled";
        out["regime"] = cfg.regime == RegimeMode::IsHigh  ? "is-high"
                        : cfg.regime == RegimeMode::IsLow ? "is-low"
                                                          : "coloring";
    }
    return out;
}

Json run_props(const ExperimentConfig& cfg, const BipartiteGraph& g, uint64_t seed) {
    Json verdicts;
    const RegimeParams params = regime_parameters(
        cfg.regime, g.delta(), cfg.regime == RegimeMode::Coloring ? cfg.q : 0, true);
    PropertyCheckConfig check;
    check.mode = cfg.props == PropsKind::Exact ? CheckMode::Exact : CheckMode::Sampled;
    check.budget = cfg.props_budget;
    check.samples_per_size = cfg.props_samples_per_size;
    check.seed = seed;
    verdicts["alpha"] = params.alpha;
    verdicts["beta"] = params.beta;
    verdicts["expander"] = verdict_to_json(is_expander(g, params.alpha, params.beta, check), g);
    if (cfg.regime == RegimeMode::IsLow) {
        verdicts["cover"] =
            verdict_to_json(has_cover_property(g, params.alpha, params.alpha, check), g);
    } else if (cfg.regime == RegimeMode::Coloring) {
        verdicts["s"] = params.s;
        verdicts["cover"] =
            verdict_to_json(has_cover_property(g, params.s, params.alpha / cfg.q, check), g);
    }
    return verdicts;
}

} // namespace

Json run_single(const ExperimentConfig& cfg, uint64_t seed) {
    Json report;
    report["schema_version"] = kReportSchemaVersion;
    report["config"] = config_echo(cfg, seed);

    const BipartiteGraph g = sample_graph({cfg.n, cfg.delta, seed});
    report["graph"] = graph_summary(g);

    if (cfg.props != PropsKind::None) report["verdicts"] = run_props(cfg, g, seed);

    if (cfg.count == CountKind::None) return report;

    Estimate estimate;
    std::optional<Rational> oracle_value;
    if (cfg.count == CountKind::IndependentSets) {
        Algorithm1Config acfg;
        acfg.branch = cfg.branch;
        acfg.force = cfg.force;
        acfg.m_override = cfg.m_override;
        acfg.alpha_n_override = cfg.alpha_n_override;
        acfg.oracle_budget = cfg.oracle_budget;
        acfg.work_budget = cfg.work_budget;
        estimate = algorithm1(g, cfg.lambda, cfg.eps, acfg);
        if (cfg.compare_oracle) {
            try {
                oracle_value = count_is(g, cfg.lambda, cfg.oracle_budget);
            } catch (const ResourceError&) {
                // Oracle out of reach at this size; report the estimate alone.
            }
        }
    } else {
        Algorithm2Config acfg;
        acfg.branch = cfg.branch;
        acfg.force = cfg.force;
        acfg.m_override = cfg.m_override;
        acfg.alpha_n_override = cfg.alpha_n_override;
        acfg.oracle_budget = cfg.oracle_budget;
        acfg.work_budget = cfg.work_budget;
        estimate = algorithm2(g, cfg.q, cfg.eps, acfg);
        if (cfg.compare_oracle) {
            try {
                oracle_value = Rational(count_colorings(g, cfg.q, cfg.oracle_budget));
            } catch (const ResourceError&) {
            }
        }
    }
    report["estimate"] = estimate_to_json(estimate);
    if (oracle_value) {
        Json oracle;
        oracle["value"] = rational_to_string(*oracle_value);
        const double log_oracle = log_rational(*oracle_value).convert_to<double>();
        oracle["log_value"] = format_log(log_oracle);
        const double abs_log_error = std::fabs(estimate.log_value - log_oracle);
        oracle["abs_log_error"] = format_log(abs_log_error);
        // Certified branches must land within eps of the truth.
        if (estimate.diagnostics.certified) oracle["within_eps"] = abs_log_error <= cfg.eps;
        report["oracle"] = oracle;
    }
    return report;
}

Json run_experiment(const ExperimentConfig& cfg) {
    Json runs = Json::array();
    std::vector<Json> results(cfg.samples);
    if (cfg.threads > 1 && cfg.samples > 1) {
        std::vector<std::future<Json>> futures;
        futures.reserve(cfg.samples);
        for (uint32_t i = 0; i < cfg.samples; ++i)
            futures.push_back(std::async(std::launch::async, run_single, cfg, cfg.seed + i));
        for (uint32_t i = 0; i < cfg.samples; ++i) results[i] = futures[i].get();
    } else {
        for (uint32_t i = 0; i < cfg.samples; ++i) results[i] = run_single(cfg, cfg.seed + i);
    }
    uint32_t expander_passes = 0;
    uint32_t expander_total = 0;
    double worst_error = 0.0;
    bool any_error = false;
    for (auto& result : results) {
        if (result.contains("verdicts")) {
            ++expander_total;
            if (result["verdicts"]["expander"]["holds"].get<bool>()) ++expander_passes;
        }
        if (result.contains("oracle") && result["oracle"].contains("abs_log_error")) {
            any_error = true;
            worst_error =
                std::max(worst_error, std::stod(result["oracle"]["abs_log_error"].get<std::string>()));
        }
        runs.push_back(std::move(result));
    }
    Json out;
    out["schema_version"] = kReportSchemaVersion;
    out["runs"] = std::move(runs);
    Json aggregate;
    if (expander_total > 0)
        aggregate["expander_pass_fraction"] =
            static_cast<double>(expander_passes) / expander_total;
    if (any_error) aggregate["worst_abs_log_error"] = format_log(worst_error);
    out["aggregate"] = aggregate;
    return out;
}

} // namespace polycount
