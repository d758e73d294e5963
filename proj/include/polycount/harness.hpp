#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "polycount/coloring.hpp"
#include "polycount/graph.hpp"
#include "polycount/hardcore.hpp"
#include "polycount/oracle.hpp"
#include "polycount/props.hpp"
#include "polycount/series.hpp"

namespace polycount {

using Json = nlohmann::json;

inline constexpr const char* kReportSchemaVersion = "1";

// Report formatting: rationals as "p/q" strings, log-space values as
// decimals with 15 significant digits.
std::string format_log(double value);
Json vertex_set_to_json(const BipartiteGraph& g, const VertexSet& set);
Json estimate_to_json(const Estimate& estimate);
Json verdict_to_json(const PropertyVerdict& verdict, const BipartiteGraph& g);
Json graph_summary(const BipartiteGraph& g);

enum class CountKind : uint8_t { None, IndependentSets, Colorings };
enum class PropsKind : uint8_t { None, Exact, Sampled };

struct ExperimentConfig {
    uint32_t n = 4;
    uint32_t delta = 2;
    uint32_t samples = 1;
    uint64_t seed = 0;
    uint32_t threads = 1;

    PropsKind props = PropsKind::None;
    RegimeMode regime = RegimeMode::IsHigh;
    uint32_t props_samples_per_size = 1000;

    CountKind count = CountKind::None;
    Rational lambda = 1;
    uint32_t q = 3;
    double eps = 0.1;
    bool force = false;
    Branch branch = Branch::Auto;
    std::optional<uint32_t> m_override;
    std::optional<uint32_t> alpha_n_override;
    bool compare_oracle = true;

    OracleBudget oracle_budget;
    uint64_t work_budget = 1ull << 24;
    uint64_t props_budget = 1ull << 24;
};

// One seeded run: generate the graph, optionally verify properties, count,
// and compare against the exact oracle when it fits the budget. The report
// is byte-stable for a fixed config and seed apart from the timing fields.
Json run_single(const ExperimentConfig& cfg, uint64_t seed);

// Sweep over cfg.samples seeds (cfg.seed, cfg.seed+1, ...), optionally in
// parallel; output order follows the seed order. Aggregates property
// pass-fractions and worst observed errors.
Json run_experiment(const ExperimentConfig& cfg);

} // namespace polycount
