#include "commands.hpp"

#include "nairu/analysis.hpp"
#include "nairu/config.hpp"
#include "nairu/errors.hpp"
#include "nairu/simulation.hpp"
#include "nairu/stability.hpp"
#include "nairu/svg_plot.hpp"
#include "nairu/trajectory_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

namespace nairu::cli {

namespace {

struct Options {
    std::string config;
    std::string out;
    std::string input;
    std::string members_dir;
    std::optional<double> dt;
    std::optional<double> horizon;
    std::optional<Dynamics> dynamics;
};

class IoFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string sci6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string complex6(const ComplexValue& c) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.6f%+.6fi", c.real(), c.imag());
    return buf;
}

ScenarioConfig load_with_overrides(const Options& opt) {
    ScenarioConfig cfg = load_config(opt.config);
    Scenario& sc = cfg.scenario;
    if (opt.dt) {
        sc.dt = *opt.dt;
    }
    if (opt.horizon) {
        sc.horizon = *opt.horizon;
    }
    if (opt.dynamics) {
        sc.dynamics = *opt.dynamics;
    }
    validate_scenario(sc);
    return cfg;
}

Trajectory read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure("cannot read trajectory file '" + path + "'");
    }
    return read_trajectory_csv(in);
}

template <typename Writer>
void write_output(const std::string& path, std::ostream& fallback, Writer&& writer) {
    if (path.empty()) {
        writer(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoFailure("cannot open '" + path + "' for writing");
    }
    writer(file);
    if (!file.flush()) {
        throw IoFailure("failed writing '" + path + "'");
    }
}

int simulate(const Options& opt, std::ostream& out) {
    const ScenarioConfig cfg = load_with_overrides(opt);
    const Trajectory traj = integrate(cfg.scenario);
    write_output(opt.out, out, [&](std::ostream& os) { write_trajectory_csv(os, traj); });
    return kOk;
}

int stability(const Options& opt, std::ostream& out) {
    const ScenarioConfig cfg = load_with_overrides(opt);
    const ModelParams& p = cfg.scenario.params;
    const StabilityReport r = stability_report(p, to_perturbation(p, cfg.scenario.initial),
                                               cfg.analysis.re_tolerance);
    out << "eigenvalue_1: " << complex6(r.eigenvalues[0]) << '\n'
        << "eigenvalue_2: " << complex6(r.eigenvalues[1]) << '\n'
        << "classification: " << to_string(r.classification) << '\n'
        << "omega: " << fixed6(r.omega) << '\n'
        << "period_years: " << fixed6(r.period) << '\n'
        << "phase_lag_years: " << fixed6(r.phase_lag) << '\n'
        << "phase_lag_months: " << fixed6(12.0 * r.phase_lag) << '\n'
        << "geometric_mean_speed: " << fixed6(geometric_mean_speed(p)) << '\n'
        << "amplitude_inflation: " << fixed6(r.amplitude_inflation) << '\n'
        << "amplitude_unemployment: " << fixed6(r.amplitude_unemployment) << '\n';
    return kOk;
}

int analyze(const Options& opt, std::ostream& out) {
    const CycleStats s = analyze_cycles(read_input(opt.input));
    out << "period_years: " << fixed6(s.period) << '\n'
        << "phase_lag_years: " << fixed6(s.phase_lag) << '\n'
        << "phase_lag_months: " << fixed6(12.0 * s.phase_lag) << '\n'
        << "amplitude_inflation: " << fixed6(s.amplitude_inflation) << '\n'
        << "amplitude_unemployment: " << fixed6(s.amplitude_unemployment) << '\n'
        << "mean_inflation: " << fixed6(s.mean_inflation) << '\n'
        << "mean_unemployment: " << fixed6(s.mean_unemployment) << '\n';
    return kOk;
}

int fit(const Options& opt, std::ostream& out) {
    const FitResult f = fit_params(read_input(opt.input));
    out << "a: " << fixed6(f.params.a) << '\n'
        << "kappa: " << fixed6(f.params.kappa) << '\n'
        << "n: " << fixed6(f.params.n) << '\n'
        << "z: " << fixed6(f.params.z) << '\n'
        << "kappa_over_a: " << fixed6(f.params.unemployment_speed()) << '\n'
        << "residual_inflation_eq: " << sci6(f.residual_inflation_eq) << '\n'
        << "residual_unemployment_eq: " << sci6(f.residual_unemployment_eq) << '\n'
        << "samples_used: " << f.samples_used << '\n';
    return kOk;
}

int ensemble(const Options& opt, std::ostream& out) {
    const ScenarioConfig cfg = load_with_overrides(opt);
    if (cfg.industries.empty()) {
        throw ParseError(0, 0, "industries", "ensemble needs an 'industries' list in the config");
    }
    const Scenario& sc = cfg.scenario;
    const EnsembleResult result = run_ensemble(cfg.industries, sc.initial, sc.horizon, sc.dt);
    write_output(opt.out, out,
                 [&](std::ostream& os) { write_trajectory_csv(os, result.aggregate); });
    if (!opt.members_dir.empty()) {
        std::filesystem::create_directories(opt.members_dir);
        for (std::size_t i = 0; i < result.members.size(); ++i) {
            const auto path = std::filesystem::path(opt.members_dir) /
                              (cfg.industries[i].label + ".csv");
            write_output(path.string(), out, [&](std::ostream& os) {
                write_trajectory_csv(os, result.members[i]);
            });
        }
    }
    if (!opt.out.empty()) {
        const ModelParams& p = *result.aggregate.params;
        out << "industries: " << cfg.industries.size() << '\n'
            << "averaged_a: " << fixed6(p.a) << '\n'
            << "averaged_kappa_over_a: " << fixed6(p.unemployment_speed()) << '\n'
            << "averaged_kappa: " << fixed6(p.kappa) << '\n'
            << "averaged_n: " << fixed6(p.n) << '\n'
            << "averaged_z: " << fixed6(p.z) << '\n';
    }
    return kOk;
}

int plot(const Options& opt, std::ostream& out) {
    const std::string svg = render_svg(read_input(opt.input));
    write_output(opt.out, out, [&](std::ostream& os) { os << svg; });
    return kOk;
}

void add_common(CLI::App& cmd, Options& opt, bool with_config) {
    if (with_config) {
        cmd.add_option("--config", opt.config, "Scenario configuration (YAML)")
            ->required()
            ->check(CLI::ExistingFile);
        cmd.add_option("--dt", opt.dt, "Override step size [years]");
        cmd.add_option("--horizon", opt.horizon, "Override horizon [years]");
        const std::map<std::string, Dynamics> names{{"nonlinear", Dynamics::Nonlinear},
                                                    {"linearized", Dynamics::Linearized}};
        cmd.add_option("--dynamics", opt.dynamics, "nonlinear | linearized")
            ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Inflation-unemployment business-cycle model", "nairu"};
    app.require_subcommand(1, 1);
    Options opt;

    auto* sim = app.add_subcommand("simulate", "Integrate a scenario and write a trajectory CSV");
    add_common(*sim, opt, true);
    sim->add_option("--out", opt.out, "Output CSV (default: stdout)");

    auto* stab = app.add_subcommand("stability", "Print the linear stability report");
    add_common(*stab, opt, true);

    auto* ana = app.add_subcommand("analyze", "Measure period, phase lag and amplitudes");
    ana->add_option("trajectory", opt.input, "Trajectory CSV")->required();

    auto* fitc = app.add_subcommand("fit", "Estimate a, kappa, n, z from a trajectory");
    fitc->add_option("trajectory", opt.input, "Trajectory CSV")->required();

    auto* ens = app.add_subcommand("ensemble", "Simulate industries and their aggregate");
    add_common(*ens, opt, true);
    ens->add_option("--out", opt.out, "Aggregate CSV (default: stdout)");
    ens->add_option("--members-dir", opt.members_dir, "Directory for per-industry CSVs");

    auto* plt = app.add_subcommand("plot", "Render a trajectory as SVG");
    plt->add_option("trajectory", opt.input, "Trajectory CSV")->required();
    plt->add_option("--out", opt.out, "Output SVG (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "nairu: error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (sim->parsed()) {
            return simulate(opt, out);
        }
        if (stab->parsed()) {
            return stability(opt, out);
        }
        if (ana->parsed()) {
            return analyze(opt, out);
        }
        if (fitc->parsed()) {
            return fit(opt, out);
        }
        if (ens->parsed()) {
            return ensemble(opt, out);
        }
        if (plt->parsed()) {
            return plot(opt, out);
        }
    } catch (const ParseError& e) {
        err << "nairu: config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const IntegrationAbort& e) {
        err << "nairu: " << e.what() << '\n';
        return kIntegrationAbort;
    } catch (const DomainError& e) {
        err << "nairu: domain error: " << e.what() << '\n';
        return kDomainError;
    } catch (const AnalysisError& e) {
        err << "nairu: analysis error: " << e.what() << '\n';
        return kAnalysisError;
    } catch (const FormatError& e) {
        err << "nairu: analysis error: " << e.what() << '\n';
        return kAnalysisError;
    } catch (const std::exception& e) {
        err << "nairu: error: " << e.what() << '\n';
        return kIoError;
    }
    return kConfigError;
}

}  // namespace nairu::cli
