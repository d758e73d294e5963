// Command-line harness: generate random regular bipartite graphs, verify
// their structural properties, and count independent sets / colorings by
// brute force or through the polymer pipeline.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycount/coloring.hpp"
#include "polycount/errors.hpp"
#include "polycount/graph.hpp"
#include "polycount/hardcore.hpp"
#include "polycount/harness.hpp"
#include "polycount/oracle.hpp"
#include "polycount/polymer.hpp"
#include "polycount/props.hpp"
#include "polycount/random_gen.hpp"
#include "polycount/series.hpp"

namespace {

using polycount::Json;

void write_output(const Json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw polycount::ParseError(0, "cannot open output file '" + out_path + "'");
    out << report.dump(2) << '\n';
}

std::vector<int> parse_color_set(const std::string& text) {
    std::vector<int> colors;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        try {
            colors.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw polycount::PreconditionError("invalid color set '" + text + "'");
        }
    }
    if (colors.empty()) throw polycount::PreconditionError("empty color set");
    return colors;
}

polycount::Branch parse_branch(const std::string& text) {
    if (text == "auto") return polycount::Branch::Auto;
    if (text == "brute") return polycount::Branch::Brute;
    if (text == "polymer") return polycount::Branch::Polymer;
    throw polycount::PreconditionError("branch must be auto|brute|polymer");
}

struct GlobalOptions {
    uint64_t seed = 0;
    uint64_t budget = 1ull << 24;
    uint32_t threads = 1;
    std::string out;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polymer-model counting on random regular bipartite graphs"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--seed", global.seed, "master RNG seed");
    app.add_option("--budget", global.budget, "enumeration work budget");
    app.add_option("--threads", global.threads, "worker threads for experiment sweeps");
    app.add_option("--out", global.out, "write the JSON report to this file");

    // gen
    auto* gen = app.add_subcommand("gen", "sample a graph from G^bip_{n,Delta}");
    uint32_t gen_n = 4;
    uint32_t gen_delta = 2;
    std::string gen_out;
    gen->add_option("--n", gen_n, "vertices per side")->required();
    gen->add_option("--delta", gen_delta, "regularity degree")->required();
    gen->add_option("--out", gen_out, "graph file to write")->required();

    // props
    auto* props = app.add_subcommand("props", "verify expander / cover properties");
    std::string props_graph;
    std::string props_mode = "exact";
    std::string props_regime = "is-high";
    uint32_t props_q = 3;
    uint32_t props_samples = 1000;
    props->add_option("--graph", props_graph)->required();
    props->add_option("--mode", props_mode, "exact|sampled");
    props->add_option("--regime", props_regime, "is-high|is-low|coloring");
    props->add_option("--q", props_q, "colors (coloring regime)");
    props->add_option("--samples", props_samples, "sampled subsets per size");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    std::string oracle_graph;
    bool oracle_is = false;
    bool oracle_colorings = false;
    std::string oracle_lambda = "1";
    uint32_t oracle_q = 3;
    std::string oracle_cluster;
    std::string oracle_x;
    std::optional<uint32_t> oracle_alpha_n;
    oracle->add_option("--graph", oracle_graph)->required();
    oracle->add_flag("--is", oracle_is, "weighted independent sets");
    oracle->add_flag("--colorings", oracle_colorings, "proper colorings");
    oracle->add_option("--lambda", oracle_lambda, "fugacity p/q");
    oracle->add_option("--q", oracle_q, "colors");
    oracle->add_option("--cluster", oracle_cluster, "cluster side L|R (independent sets)");
    oracle->add_option("--x", oracle_x, "cluster color set, e.g. 1,2 (colorings)");
    oracle->add_option("--alpha-n", oracle_alpha_n, "cluster deviation cap");

    // xi
    auto* xi = app.add_subcommand("xi", "polymer partition function / log estimate");
    std::string xi_graph;
    std::string xi_model = "hardcore";
    std::string xi_lambda = "1";
    std::string xi_side = "L";
    uint32_t xi_q = 3;
    std::string xi_x = "1";
    std::optional<uint32_t> xi_alpha_n;
    double xi_eps = 0.1;
    std::optional<double> xi_radius;
    std::optional<uint32_t> xi_m;
    bool xi_exact_flag = false;
    std::optional<uint32_t> xi_cap;
    xi->add_option("--graph", xi_graph)->required();
    xi->add_option("--model", xi_model, "hardcore|coloring");
    xi->add_option("--lambda", xi_lambda);
    xi->add_option("--side", xi_side, "cluster side L|R (hardcore)");
    xi->add_option("--q", xi_q);
    xi->add_option("--x", xi_x, "color set of the ground cluster");
    xi->add_option("--alpha-n", xi_alpha_n, "polymer size cap");
    xi->add_option("--eps", xi_eps);
    xi->add_option("--radius", xi_radius);
    xi->add_option("--m", xi_m, "truncation order override");
    xi->add_flag("--exact", xi_exact_flag, "exact rational Xi(1)");
    xi->add_option("--cap", xi_cap, "restrict compatible sets to |Gamma| < cap (exact mode)");

    // kp-check
    auto* kp = app.add_subcommand("kp-check", "Kotecky-Preiss condition check");
    std::string kp_graph;
    std::string kp_model = "hardcore";
    std::string kp_lambda = "1";
    std::string kp_side = "L";
    uint32_t kp_q = 3;
    std::string kp_x = "1";
    std::optional<uint32_t> kp_alpha_n;
    double kp_a_coeff = 1.0;
    double kp_radius = 1.0;
    kp->add_option("--graph", kp_graph)->required();
    kp->add_option("--model", kp_model, "hardcore|coloring");
    kp->add_option("--lambda", kp_lambda);
    kp->add_option("--side", kp_side);
    kp->add_option("--q", kp_q);
    kp->add_option("--x", kp_x);
    kp->add_option("--alpha-n", kp_alpha_n);
    kp->add_option("--a-coeff", kp_a_coeff, "a(gamma) = a-coeff * |gamma|");
    kp->add_option("--radius", kp_radius);

    // count-is
    auto* count_is_cmd = app.add_subcommand("count-is", "Algorithm for Z(G, lambda)");
    std::string ci_graph;
    std::string ci_lambda = "1";
    double ci_eps = 0.1;
    bool ci_force = false;
    bool ci_exact = false;
    std::string ci_branch = "auto";
    std::optional<uint32_t> ci_m;
    std::optional<uint32_t> ci_alpha_n;
    count_is_cmd->add_option("--graph", ci_graph)->required();
    count_is_cmd->add_option("--lambda", ci_lambda)->required();
    count_is_cmd->add_option("--eps", ci_eps)->required();
    count_is_cmd->add_flag("--force", ci_force, "bypass regime bounds");
    count_is_cmd->add_flag("--exact", ci_exact, "polymer branch with exact capped Xi");
    count_is_cmd->add_option("--branch", ci_branch, "auto|brute|polymer");
    count_is_cmd->add_option("--m", ci_m, "truncation order override");
    count_is_cmd->add_option("--alpha-n", ci_alpha_n);

    // count-colorings
    auto* count_col_cmd = app.add_subcommand("count-colorings", "Algorithm for |C(G)|");
    std::string cc_graph;
    uint32_t cc_q = 3;
    double cc_eps = 0.1;
    bool cc_force = false;
    bool cc_exact = false;
    std::string cc_branch = "auto";
    std::optional<uint32_t> cc_m;
    std::optional<uint32_t> cc_alpha_n;
    count_col_cmd->add_option("--graph", cc_graph)->required();
    count_col_cmd->add_option("--q", cc_q)->required();
    count_col_cmd->add_option("--eps", cc_eps)->required();
    count_col_cmd->add_flag("--force", cc_force);
    count_col_cmd->add_flag("--exact", cc_exact);
    count_col_cmd->add_option("--branch", cc_branch, "auto|brute|polymer");
    count_col_cmd->add_option("--m", cc_m);
    count_col_cmd->add_option("--alpha-n", cc_alpha_n);

    // experiment
    auto* experiment = app.add_subcommand("experiment", "generate -> verify -> count -> compare");
    polycount::ExperimentConfig ex_cfg;
    std::string ex_props = "none";
    std::string ex_regime = "is-high";
    std::string ex_count = "none";
    std::string ex_lambda = "1";
    std::string ex_branch = "auto";
    experiment->add_option("--n", ex_cfg.n)->required();
    experiment->add_option("--delta", ex_cfg.delta)->required();
    experiment->add_option("--samples", ex_cfg.samples);
    experiment->add_option("--props", ex_props, "none|exact|sampled");
    experiment->add_option("--regime", ex_regime, "is-high|is-low|coloring");
    experiment->add_option("--props-samples", ex_cfg.props_samples_per_size);
    experiment->add_option("--count", ex_count, "none|is|colorings");
    experiment->add_option("--lambda", ex_lambda);
    experiment->add_option("--q", ex_cfg.q);
    experiment->add_option("--eps", ex_cfg.eps);
    experiment->add_flag("--force", ex_cfg.force);
    experiment->add_option("--branch", ex_branch, "auto|brute|polymer");
    experiment->add_option("--m", ex_cfg.m_override);
    experiment->add_option("--alpha-n", ex_cfg.alpha_n_override);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 4;
    }

    try {
        polycount::OracleBudget oracle_budget{global.budget};

        if (*gen) {
            const polycount::BipartiteGraph g =
                polycount::sample_graph({gen_n, gen_delta, global.seed});
            std::ofstream out(gen_out);
            if (!out) throw polycount::ParseError(0, "cannot open '" + gen_out + "'");
            polycount::serialize_graph(g, out);
            Json report;
            report["schema_version"] = polycount::kReportSchemaVersion;
            report["graph"] = polycount::graph_summary(g);
            report["seed"] = global.seed;
            report["file"] = gen_out;
            write_output(report, global.out);
            return 0;
        }

        if (*props) {
            const auto g = polycount::parse_graph_file(props_graph);
            polycount::RegimeMode mode;
            if (props_regime == "is-high") mode = polycount::RegimeMode::IsHigh;
            else if (props_regime == "is-low") mode = polycount::RegimeMode::IsLow;
            else if (props_regime == "coloring") mode = polycount::RegimeMode::Coloring;
            else throw polycount::PreconditionError("regime must be is-high|is-low|coloring");

            const auto params = polycount::regime_parameters(
                mode, g.delta(), mode == polycount::RegimeMode::Coloring ? props_q : 0, true);
            bool bound_met = true;
            try {
                polycount::regime_parameters(
                    mode, g.delta(), mode == polycount::RegimeMode::Coloring ? props_q : 0, false);
            } catch (const polycount::RegimeError&) {
                bound_met = false;
            }

            polycount::PropertyCheckConfig check;
            if (props_mode == "exact") check.mode = polycount::CheckMode::Exact;
            else if (props_mode == "sampled") check.mode = polycount::CheckMode::Sampled;
            else throw polycount::PreconditionError("mode must be exact|sampled");
            check.budget = global.budget;
            check.samples_per_size = props_samples;
            check.seed = global.seed;

            Json report;
            report["schema_version"] = polycount::kReportSchemaVersion;
            report["graph"] = polycount::graph_summary(g);
            report["regime"] = props_regime;
            report["regime_bound_met"] = bound_met;
            report["alpha"] = params.alpha;
            report["beta"] = params.beta;
            report["expander"] = polycount::verdict_to_json(
                polycount::is_expander(g, params.alpha, params.beta, check), g);
            if (mode == polycount::RegimeMode::IsLow)
                report["cover"] = polycount::verdict_to_json(
                    polycount::has_cover_property(g, params.alpha, params.alpha, check), g);
            if (mode == polycount::RegimeMode::Coloring) {
                report["s"] = params.s;
                report["cover"] = polycount::verdict_to_json(
                    polycount::has_cover_property(g, params.s, params.alpha / props_q, check), g);
            }
            write_output(report, global.out);
            return 0;
        }

        if (*oracle) {
            const auto g = polycount::parse_graph_file(oracle_graph);
            if (oracle_is == oracle_colorings)
                throw polycount::PreconditionError("oracle: pass exactly one of --is, --colorings");
            Json report;
            report["schema_version"] = polycount::kReportSchemaVersion;
            report["graph"] = polycount::graph_summary(g);
            if (oracle_is) {
                const auto lambda = polycount::rational_from_string(oracle_lambda);
                report["lambda"] = oracle_lambda;
                if (!oracle_cluster.empty()) {
                    if (oracle_cluster != "L" && oracle_cluster != "R")
                        throw polycount::PreconditionError("--cluster must be L or R");
                    if (!oracle_alpha_n)
                        throw polycount::PreconditionError("--cluster requires --alpha-n");
                    const auto side =
                        oracle_cluster == "L" ? polycount::Side::L : polycount::Side::R;
                    report["cluster"] = oracle_cluster;
                    report["alpha_n"] = *oracle_alpha_n;
                    report["value"] = polycount::rational_to_string(polycount::count_is_cluster(
                        g, side, *oracle_alpha_n, lambda, oracle_budget));
                } else {
                    report["value"] = polycount::rational_to_string(
                        polycount::count_is(g, lambda, oracle_budget));
                }
            } else {
                report["q"] = oracle_q;
                if (!oracle_x.empty()) {
                    if (!oracle_alpha_n)
                        throw polycount::PreconditionError("--x requires --alpha-n");
                    const auto x = parse_color_set(oracle_x);
                    report["x"] = oracle_x;
                    report["alpha_n"] = *oracle_alpha_n;
                    report["value"] = polycount::count_colorings_cluster(
                                          g, x, *oracle_alpha_n, oracle_q, oracle_budget)
                                          .str();
                } else {
                    report["value"] = polycount::count_colorings(g, oracle_q, oracle_budget).str();
                }
            }
            write_output(report, global.out);
            return 0;
        }

        auto build_model = [&](const polycount::BipartiteGraph& g, const std::string& model_name,
                               const std::string& lambda_text, const std::string& side_text,
                               uint32_t q, const std::string& x_text,
                               std::optional<uint32_t> alpha_n) -> polycount::PolymerModel {
            const uint32_t cap = alpha_n ? *alpha_n : polycount::kNoSizeCap;
            if (model_name == "hardcore") {
                polycount::HardcoreParams params;
                params.lambda = polycount::rational_from_string(lambda_text);
                if (side_text != "L" && side_text != "R")
                    throw polycount::PreconditionError("--side must be L or R");
                params.side = side_text == "L" ? polycount::Side::L : polycount::Side::R;
                params.alpha_n = cap;
                return polycount::build_hardcore_model(g, params);
            }
            if (model_name == "coloring")
                return polycount::build_coloring_model(g, parse_color_set(x_text), q, cap);
            throw polycount::PreconditionError("model must be hardcore|coloring");
        };

        if (*xi) {
            const auto g = polycount::parse_graph_file(xi_graph);
            const auto model =
                build_model(g, xi_model, xi_lambda, xi_side, xi_q, xi_x, xi_alpha_n);
            Json report;
            report["schema_version"] = polycount::kReportSchemaVersion;
            report["graph"] = polycount::graph_summary(g);
            report["model"] = xi_model;
            if (xi_exact_flag) {
                const uint32_t cap = xi_cap ? *xi_cap : polycount::kNoSizeCap;
                const auto value =
                    polycount::xi_exact(model, polycount::Rational(1), cap, global.budget);
                report["xi_exact"] = polycount::rational_to_string(value);
                if (xi_cap) report["cap"] = *xi_cap;
            } else {
                const bool high_fugacity =
                    xi_model == "hardcore" &&
                    polycount::rational_from_string(xi_lambda) >= 1;
                const double radius = xi_radius ? *xi_radius : (high_fugacity ? 1.001 : 2.0);
                const auto estimate =
                    polycount::estimate_log_xi(model, xi_eps, radius, xi_m, global.budget);
                report["estimate"] = polycount::estimate_to_json(estimate);
            }
            write_output(report, global.out);
            return 0;
        }

        if (*kp) {
            const auto g = polycount::parse_graph_file(kp_graph);
            const auto model =
                build_model(g, kp_model, kp_lambda, kp_side, kp_q, kp_x, kp_alpha_n);
            const auto result = polycount::kp_check(model, kp_a_coeff, kp_radius);
            Json report;
            report["schema_version"] = polycount::kReportSchemaVersion;
            report["graph"] = polycount::graph_summary(g);
            report["model"] = kp_model;
            report["a_coeff"] = kp_a_coeff;
            report["radius"] = kp_radius;
            report["polymer_count"] = result.polymer_count;
            report["max_ratio"] = result.max_ratio;
            report["passes"] = result.max_ratio <= 1.0;
            if (result.argmax)
                report["argmax"] = polycount::vertex_set_to_json(g, result.argmax->support);
            write_output(report, global.out);
            return 0;
        }

        if (*count_is_cmd) {
            const auto g = polycount::parse_graph_file(ci_graph);
            polycount::Algorithm1Config cfg;
            cfg.branch = parse_branch(ci_branch);
            cfg.force = ci_force;
            cfg.exact = ci_exact;
            cfg.m_override = ci_m;
            cfg.alpha_n_override = ci_alpha_n;
            cfg.oracle_budget = oracle_budget;
            cfg.work_budget = global.budget;
            const auto estimate =
                polycount::algorithm1(g, polycount::rational_from_string(ci_lambda), ci_eps, cfg);
            Json report;
            report["schema_version"] = polycount::kReportSchemaVersion;
            report["graph"] = polycount::graph_summary(g);
            report["lambda"] = ci_lambda;
            report["eps"] = ci_eps;
            report["estimate"] = polycount::estimate_to_json(estimate);
            write_output(report, global.out);
            return 0;
        }

        if (*count_col_cmd) {
            const auto g = polycount::parse_graph_file(cc_graph);
            polycount::Algorithm2Config cfg;
            cfg.branch = parse_branch(cc_branch);
            cfg.force = cc_force;
            cfg.exact = cc_exact;
            cfg.m_override = cc_m;
            cfg.alpha_n_override = cc_alpha_n;
            cfg.oracle_budget = oracle_budget;
            cfg.work_budget = global.budget;
            const auto estimate = polycount::algorithm2(g, cc_q, cc_eps, cfg);
            Json report;
            report["schema_version"] = polycount::kReportSchemaVersion;
            report["graph"] = polycount::graph_summary(g);
            report["q"] = cc_q;
            report["eps"] = cc_eps;
            report["estimate"] = polycount::estimate_to_json(estimate);
            write_output(report, global.out);
            return 0;
        }

        if (*experiment) {
            ex_cfg.seed = global.seed;
            ex_cfg.threads = global.threads;
            ex_cfg.oracle_budget = oracle_budget;
            ex_cfg.work_budget = global.budget;
            ex_cfg.props_budget = global.budget;
            ex_cfg.lambda = polycount::rational_from_string(ex_lambda);
            ex_cfg.branch = parse_branch(ex_branch);
            if (ex_props == "none") ex_cfg.props = polycount::PropsKind::None;
            else if (ex_props == "exact") ex_cfg.props = polycount::PropsKind::Exact;
            else if (ex_props == "sampled") ex_cfg.props = polycount::PropsKind::Sampled;
            else throw polycount::PreconditionError("--props must be none|exact|sampled");
            if (ex_regime == "is-high") ex_cfg.regime = polycount::RegimeMode::IsHigh;
            else if (ex_regime == "is-low") ex_cfg.regime = polycount::RegimeMode::IsLow;
            else if (ex_regime == "coloring") ex_cfg.regime = polycount::RegimeMode::Coloring;
            else throw polycount::PreconditionError("--regime must be is-high|is-low|coloring");
            if (ex_count == "none") ex_cfg.count = polycount::CountKind::None;
            else if (ex_count == "is") ex_cfg.count = polycount::CountKind::IndependentSets;
            else if (ex_count == "colorings") ex_cfg.count = polycount::CountKind::Colorings;
            else throw polycount::PreconditionError("--count must be none|is|colorings");
            write_output(polycount::run_experiment(ex_cfg), global.out);
            return 0;
        }
    } catch (const polycount::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 4;
    } catch (const polycount::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return 3;
    } catch (const polycount::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
