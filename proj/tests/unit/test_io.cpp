#include <catch2/catch_amalgamated.hpp>

#include "nairu/analysis.hpp"
#include "nairu/config.hpp"
#include "nairu/errors.hpp"
#include "nairu/simulation.hpp"
#include "nairu/svg_plot.hpp"
#include "nairu/trajectory_io.hpp"

#include <cstring>
#include <random>
#include <sstream>

using namespace nairu;
using Catch::Approx;

namespace {
constexpr ModelParams fig1 = kFigure1Params;

constexpr const char* kMinimal = R"(params: {a: 1.5, kappa: 0.85, n: 0.05, z: 0.02}
initial: {inflation: 0.02, unemployment: 0.04}
)";

ParseError parse_error_of(std::string_view text) {
    try {
        parse_config(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a ParseError");
    return ParseError(0, 0, "", "");
}

Trajectory figure1_run() {
    Scenario sc;
    sc.params = fig1;
    sc.initial = {0.02, 0.04};
    return integrate(sc);
}

std::string to_csv(const Trajectory& t) {
    std::ostringstream os;
    write_trajectory_csv(os, t);
    return os.str();
}

Trajectory from_csv(const std::string& text) {
    std::istringstream is(text);
    return read_trajectory_csv(is);
}
}  // namespace

TEST_CASE("minimal config applies defaults", "[io][config]") {
    const ScenarioConfig cfg = parse_config(kMinimal);
    CHECK(cfg.scenario.params == fig1);
    CHECK(cfg.scenario.initial == State{0.02, 0.04});
    CHECK(cfg.scenario.horizon == 20.0);
    CHECK(cfg.scenario.dt == 0.01);
    CHECK(cfg.scenario.dynamics == Dynamics::Nonlinear);
    CHECK(cfg.scenario.record_every == 1);
    CHECK(cfg.scenario.shocks.empty());
    CHECK(cfg.industries.empty());
    CHECK(cfg.analysis.re_tolerance == 1e-12);
}

TEST_CASE("full config", "[io][config]") {
    const ScenarioConfig cfg = parse_config(R"(
params: {a: 1.5, kappa: 0.85, n: 0.05, z: 0.02}
initial: {inflation: 0.02, unemployment: 0.04}
horizon: 30
dt: 0.005
dynamics: linearized
record_every: 4
shocks:
  - {time: 2.5, set_inflation: 0.03}
  - {time: 7, add_unemployment: -0.004, add_inflation: 0.001, set_unemployment: 0.05}
industries:
  - {label: auto, params: {a: 1.4, kappa: 0.7, n: 0.05, z: 0.02}, weight: 2}
  - label: banks
    params: {a: 1.6, kappa: 1.0, n: 0.06, z: 0.02}
    initial: {inflation: 0.025, unemployment: 0.06}
analysis: {re_tolerance: 1.0e-10}
)");
    const Scenario& sc = cfg.scenario;
    CHECK(sc.horizon == 30.0);
    CHECK(sc.dt == 0.005);
    CHECK(sc.dynamics == Dynamics::Linearized);
    CHECK(sc.record_every == 4);
    REQUIRE(sc.shocks.size() == 2);
    CHECK(sc.shocks[0].time == 2.5);
    CHECK(*sc.shocks[0].set_inflation == 0.03);
    CHECK_FALSE(sc.shocks[0].set_unemployment.has_value());
    CHECK(sc.shocks[1].add_unemployment == -0.004);
    CHECK(*sc.shocks[1].set_unemployment == 0.05);
    REQUIRE(cfg.industries.size() == 2);
    CHECK(cfg.industries[0].label == "auto");
    CHECK(cfg.industries[0].weight == 2.0);
    CHECK_FALSE(cfg.industries[0].initial.has_value());
    CHECK(*cfg.industries[1].initial == State{0.025, 0.06});
    CHECK(cfg.analysis.re_tolerance == 1e-10);
}

TEST_CASE("industries alone define the scenario params", "[io][config]") {
    const ScenarioConfig cfg = parse_config(R"(
initial: {inflation: 0.02, unemployment: 0.048}
industries:
  - {label: low, params: {a: 1.4, kappa: 0.7, n: 0.05, z: 0.02}}
  - {label: high, params: {a: 1.6, kappa: 1.0133333333333334, n: 0.05, z: 0.02}}
)");
    CHECK(cfg.scenario.params.a == Approx(1.5));
    CHECK(cfg.scenario.params.kappa == Approx(0.85).epsilon(1e-12));
}

TEST_CASE("shipped reference config", "[io][config]") {
    const ScenarioConfig cfg = load_config(NAIRU_CONFIG_DIR "/figure1.yaml");
    CHECK(cfg.scenario.params == fig1);
    CHECK(cfg.scenario.initial == State{0.02, 0.04});
    CHECK(cfg.scenario.horizon == 20.0);
    CHECK(estimate_period(integrate(cfg.scenario), Field::Inflation) ==
          Approx(6.99).margin(0.07));
}

TEST_CASE("config errors carry locations", "[io][config]") {
    SECTION("typo in a parameter name") {
        const ParseError e = parse_error_of(R"(params: {a: 1.5, kapa: 0.85, n: 0.05, z: 0.02}
initial: {inflation: 0.02, unemployment: 0.04}
)");
        CHECK(e.key() == "params.kapa");
        CHECK(e.line() == 1);
        CHECK(e.column() > 1);
        CHECK(std::string(e.what()).find("unknown key 'params.kapa'") != std::string::npos);
    }

    SECTION("unknown top-level key on a later line") {
        const ParseError e = parse_error_of(std::string(kMinimal) + "horizn: 10\n");
        CHECK(e.key() == "horizn");
        CHECK(e.line() == 3);
    }

    SECTION("syntax error") {
        const ParseError e = parse_error_of("params: {a: 1.5\ninitial: [\n");
        CHECK(e.line() >= 1);
    }

    SECTION("wrong types and missing keys") {
        CHECK(parse_error_of(R"(params: {a: fast, kappa: 0.85, n: 0.05, z: 0.02}
initial: {inflation: 0.02, unemployment: 0.04})")
                  .key() == "params.a");
        CHECK(parse_error_of("params: {a: 1.5, kappa: 0.85, n: 0.05, z: 0.02}\n").key() ==
              "initial");
        CHECK(parse_error_of("initial: {inflation: 0.02, unemployment: 0.04}\n").key() ==
              "params");
        CHECK(parse_error_of(R"(params: {a: 1.5, kappa: 0.85, z: 0.02}
initial: {inflation: 0.02, unemployment: 0.04})")
                  .key() == "params.n");
        CHECK(parse_error_of(std::string(kMinimal) + "dynamics: chaotic\n").key() == "dynamics");
        CHECK(parse_error_of(std::string(kMinimal) + "record_every: 0\n").key() ==
              "record_every");
        CHECK(parse_error_of(std::string(kMinimal) + "shocks:\n  - {time: 1, set_inflaton: 0.1}\n")
                  .key() == "shocks[0].set_inflaton");
        CHECK(parse_error_of("- 1\n- 2\n").line() == 1);
        CHECK(parse_error_of("").line() == 1);
    }
}

TEST_CASE("config domain errors pass through", "[io][config]") {
    try {
        parse_config(R"(params: {a: 1.5, kappa: 0.85, n: 1.2, z: 0.02}
initial: {inflation: 0.02, unemployment: 0.04})");
        FAIL("expected a DomainError");
    } catch (const DomainError& e) {
        CHECK(e.field() == "n");
        CHECK(std::string(e.what()).find("0 < n < 1") != std::string::npos);
        CHECK(std::string(e.what()).find("params") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config(std::string(kMinimal) + "dt: 50\n"), DomainError);
    CHECK_THROWS_AS(parse_config(R"(params: {a: 1.5, kappa: 0.85, n: 0.05, z: 0.02}
initial: {inflation: 0.02, unemployment: 1.0})"),
                    DomainError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.yaml"), ParseError);
}

TEST_CASE("trajectory records", "[io][csv]") {
    const Trajectory t = figure1_run();
    const auto rows = to_records(t);
    REQUIRE(rows.size() == t.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(rows[i].eps == rows[i].inflation - fig1.z);
        REQUIRE(rows[i].eta == rows[i].unemployment - fig1.n);
        REQUIRE(rows[i].conserved == conserved_quantity(fig1, t.states[i], Dynamics::Nonlinear));
    }
    Trajectory bare = t;
    bare.params.reset();
    CHECK_THROWS_AS(to_records(bare), std::invalid_argument);
}

TEST_CASE("CSV layout", "[io][csv]") {
    const std::string text = to_csv(figure1_run());
    CHECK(text.rfind("t,inflation,unemployment,eps,eta,conserved\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.back() == '\n');
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(20.0) == "20");
}

TEST_CASE("CSV round trip is lossless", "[io][csv][property]") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 0.999);
    Trajectory t;
    t.params = fig1;
    for (int i = 0; i < 500; ++i) {
        t.times.push_back(0.01 * i);
        t.states.push_back({value(rng) * std::pow(10.0, -(i % 30)), u(rng)});
    }
    const Trajectory back = from_csv(to_csv(t));
    REQUIRE(back.size() == t.size());
    CHECK(std::memcmp(back.times.data(), t.times.data(), t.size() * sizeof(double)) == 0);
    CHECK(std::memcmp(back.states.data(), t.states.data(), t.size() * sizeof(State)) == 0);
    CHECK_FALSE(back.params.has_value());

    const Trajectory run = figure1_run();
    const CycleStats direct = analyze_cycles(run);
    const CycleStats reread = analyze_cycles(from_csv(to_csv(run)));
    CHECK(std::memcmp(&direct, &reread, sizeof(CycleStats)) == 0);
}

TEST_CASE("malformed CSV", "[io][csv]") {
    const std::string good = to_csv(figure1_run());
    CHECK_THROWS_AS(from_csv(""), FormatError);
    CHECK_THROWS_AS(from_csv("t,inflation,unemployment,eps,eta,conserved\n"), FormatError);
    CHECK_THROWS_AS(from_csv("time,I,u\n0,0.02,0.05\n"), FormatError);
    CHECK_THROWS_AS(from_csv(good.substr(0, good.size() / 2)), FormatError);
    CHECK_THROWS_AS(from_csv(std::string(kTrajectoryHeader) + "\n0,0.02,0.05,0,0\n"), FormatError);
    CHECK_THROWS_AS(from_csv(std::string(kTrajectoryHeader) + "\n0,0.02,0.05,0,0,0,1\n"),
                    FormatError);
    CHECK_THROWS_AS(from_csv(std::string(kTrajectoryHeader) + "\n0,abc,0.05,0,0,0\n"),
                    FormatError);
    try {
        from_csv(std::string(kTrajectoryHeader) + "\n0,0.02,0.05,0,0,0\n0,0.02,,0,0,0\n");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("SVG plot", "[io][svg]") {
    const Trajectory run = figure1_run();
    const std::string svg = render_svg(run);
    CHECK(svg == render_svg(run));
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("time [years]") != std::string::npos);
    CHECK(svg.find("inflation I(t)") != std::string::npos);
    CHECK(svg.find("unemployment u(t)") != std::string::npos);
    CHECK(svg.find(">5%</text>") != std::string::npos);
    CHECK(svg.find(">2%</text>") != std::string::npos);
    CHECK(svg.find(">10</text>") != std::string::npos);

    std::size_t polylines = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1)) {
        ++polylines;
    }
    CHECK(polylines == 2);

    Trajectory empty;
    CHECK_THROWS_AS(render_svg(empty), FormatError);
}

TEST_CASE("SVG plot of the equilibrium is two flat lines", "[io][svg]") {
    Scenario sc;
    sc.params = fig1;
    sc.initial = {0.02, 0.05};
    const std::string svg = render_svg(integrate(sc));
    int seen = 0;
    for (std::size_t pos = svg.find("points=\""); pos != std::string::npos;
         pos = svg.find("points=\"", pos + 1)) {
        const std::size_t begin = pos + 8;
        std::istringstream pts(svg.substr(begin, svg.find('"', begin) - begin));
        std::string pair;
        std::string first_y;
        while (pts >> pair) {
            const std::string y = pair.substr(pair.find(',') + 1);
            if (first_y.empty()) {
                first_y = y;
            }
            REQUIRE(y == first_y);
        }
        ++seen;
    }
    CHECK(seen == 2);
}
