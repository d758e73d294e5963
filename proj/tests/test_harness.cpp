#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polycount/harness.hpp"

using namespace polycount;

namespace {

void strip_timings(Json& node) {
    if (node.is_object()) {
        node.erase("timings");
        node.erase("elapsed_seconds");
        for (auto& [key, value] : node.items()) strip_timings(value);
    } else if (node.is_array()) {
        for (auto& value : node) strip_timings(value);
    }
}

} // namespace

TEST_CASE("report round-trips through serialization") {
    ExperimentConfig cfg;
    cfg.n = 2;
    cfg.delta = 2;
    cfg.count = CountKind::IndependentSets;
    cfg.lambda = 1;
    cfg.eps = 0.1;
    const Json report = run_single(cfg, 7);
    const Json reparsed = Json::parse(report.dump());
    CHECK(reparsed == report);
}

TEST_CASE("same config and seed give byte-identical reports modulo timing fields") {
    ExperimentConfig cfg;
    cfg.n = 3;
    cfg.delta = 2;
    cfg.count = CountKind::Colorings;
    cfg.q = 3;
    cfg.props = PropsKind::Exact;
    Json a = run_single(cfg, 11);
    Json b = run_single(cfg, 11);
    strip_timings(a);
    strip_timings(b);
    CHECK(a.dump() == b.dump());
    Json c = run_single(cfg, 12);
    strip_timings(c);
    CHECK(a.dump() != c.dump());
}

TEST_CASE("count-is run on the 4-cycle reports the oracle value exactly") {
    ExperimentConfig cfg;
    cfg.n = 2;
    cfg.delta = 2;
    cfg.seed = 7; // seed 7 samples matchings (0 1) and (1 0): the 4-cycle
    cfg.count = CountKind::IndependentSets;
    cfg.lambda = 1;
    cfg.eps = 0.1;
    const Json report = run_single(cfg, 7);
    CHECK(report["estimate"]["exact_value"] == "7");
    CHECK(report["estimate"]["method"] == "brute-force");
    CHECK(report["oracle"]["value"] == "7");
    CHECK(std::stod(report["oracle"]["abs_log_error"].get<std::string>()) == 0.0);
    CHECK(report["oracle"]["within_eps"] == true);
}

TEST_CASE("props sweep reports a pass fraction in [0,1]") {
    ExperimentConfig cfg;
    cfg.n = 8;
    cfg.delta = 2;
    cfg.samples = 5;
    cfg.props = PropsKind::Sampled;
    cfg.regime = RegimeMode::IsHigh;
    cfg.props_samples_per_size = 50;
    const Json out = run_experiment(cfg);
    REQUIRE(out["runs"].size() == 5);
    const double fraction = out["aggregate"]["expander_pass_fraction"].get<double>();
    CHECK(fraction >= 0.0);
    CHECK(fraction <= 1.0);
}

TEST_CASE("threaded sweeps match sequential output modulo timings") {
    ExperimentConfig cfg;
    cfg.n = 3;
    cfg.delta = 2;
    cfg.samples = 4;
    cfg.count = CountKind::IndependentSets;
    cfg.lambda = Rational(1, 2);
    cfg.eps = 0.2;
    cfg.threads = 1;
    Json sequential = run_experiment(cfg);
    cfg.threads = 4;
    Json threaded = run_experiment(cfg);
    strip_timings(sequential);
    strip_timings(threaded);
    CHECK(sequential.dump() == threaded.dump());
}

TEST_CASE("log formatting uses 15 significant digits") {
    CHECK(format_log(2.0 / 3.0) == "0.666666666666667");
}
