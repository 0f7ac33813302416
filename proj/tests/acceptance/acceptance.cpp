// One line per acceptance criterion; exit status is the number of failures.

#include "nairu/analysis.hpp"
#include "nairu/second_order.hpp"
#include "nairu/simulation.hpp"
#include "nairu/stability.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace nairu;

namespace {

constexpr ModelParams fig1 = kFigure1Params;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Scenario figure1_scenario(double dt = 0.01, double horizon = 20.0) {
    Scenario sc;
    sc.params = fig1;
    sc.initial = {0.02, 0.04};
    sc.dt = dt;
    sc.horizon = horizon;
    return sc;
}

double sup_state_diff(const Trajectory& x, const Trajectory& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        worst = std::max({worst, std::abs(x.states[i].inflation - y.states[i].inflation),
                          std::abs(x.states[i].unemployment - y.states[i].unemployment)});
    }
    return worst;
}

double max_relative_drift(const Trajectory& traj) {
    const double h0 = conserved_quantity(*traj.params, traj.states.front(), traj.dynamics);
    double worst = 0.0;
    for (const State& s : traj.states) {
        worst = std::max(worst, std::abs(conserved_quantity(*traj.params, s, traj.dynamics) - h0) /
                                    std::abs(h0));
    }
    return worst;
}

double max_abs_residual(const std::vector<SecondOrderResidual>& rs) {
    double worst = 0.0;
    for (const auto& r : rs) {
        worst = std::max({worst, std::abs(r.eps), std::abs(r.eta)});
    }
    return worst;
}

double worst_relative_error(const ModelParams& got, const ModelParams& want) {
    return std::max({std::abs(got.a / want.a - 1.0), std::abs(got.kappa / want.kappa - 1.0),
                     std::abs(got.n / want.n - 1.0), std::abs(got.z / want.z - 1.0)});
}

Trajectory with_noise(Trajectory t, double scale, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (State& s : t.states) {
        s.inflation += scale * std::abs(s.inflation) * gauss(rng);
        s.unemployment += scale * std::abs(s.unemployment) * gauss(rng);
    }
    return t;
}

Outcome figure1_period() {
    const auto start = std::chrono::steady_clock::now();
    const double p = estimate_period(integrate(figure1_scenario()), Field::Inflation);
    const double secs = seconds_since(start);
    return {p >= 6.92 && p <= 7.06 && secs < 1.0,
            fmt("period %.6f y in [6.92, 7.06], %.2f ms < 1 s", p, 1e3 * secs)};
}

Outcome quarter_period_lag() {
    const double lag = estimate_phase_lag(integrate(figure1_scenario()));
    return {lag >= 1.713 && lag <= 1.783,
            fmt("lag %.6f y = %.3f months in [1.713, 1.783] y", lag, 12.0 * lag)};
}

Outcome marginal_stability() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240917);
    double worst_re = 0.0;
    int marginal = 0;
    for (int i = 0; i < 1000; ++i) {
        const ModelParams p = oracle::random_params(rng);
        const auto [l1, l2] = eigenvalues(p);
        worst_re = std::max({worst_re, std::abs(l1.real()), std::abs(l2.real())});
        marginal += classify(p) == Classification::MarginallyStable ? 1 : 0;
    }
    const double secs = seconds_since(start);
    return {worst_re <= 1e-12 && marginal == 1000 && secs < 1.0,
            fmt("max |re| %.3g <= 1e-12, %d/1000 marginally stable, %.2f ms < 1 s", worst_re,
                marginal, 1e3 * secs)};
}

Outcome fixed_point() {
    Scenario sc;
    sc.params = fig1;
    sc.initial = {fig1.z, fig1.n};
    sc.horizon = 100.0;
    double worst = 0.0;
    for (const State& s : integrate(sc).states) {
        worst = std::max({worst, std::abs(s.inflation - fig1.z), std::abs(s.unemployment - fig1.n)});
    }
    return {worst <= 1e-12, fmt("max deviation %.3g <= 1e-12", worst)};
}

Outcome conservation() {
    Scenario sc = figure1_scenario(0.01, 100.0);
    const double h = max_relative_drift(integrate(sc));
    sc.dynamics = Dynamics::Linearized;
    const double c = max_relative_drift(integrate(sc));
    return {h <= 1e-6 && c <= 1e-6, fmt("drift H %.3g, C %.3g <= 1e-6", h, c)};
}

Outcome integrator_order() {
    // 7 years is one period rounded to the coarse grid.
    Scenario ref = figure1_scenario(1e-5, 7.0);
    ref.record_every = 2000;
    const Trajectory reference = integrate(ref);
    double err[2];
    int k = 0;
    for (double dt : {0.02, 0.01}) {
        Scenario sc = figure1_scenario(dt, 7.0);
        sc.record_every = static_cast<int>(std::lround(0.02 / dt));
        err[k++] = sup_state_diff(integrate(sc), reference);
    }
    const double ratio = err[0] / err[1];
    return {ratio >= 12.0 && ratio <= 20.0,
            fmt("error %.3g -> %.3g, ratio %.3f in [12, 20]", err[0], err[1], ratio)};
}

Outcome closed_form() {
    Scenario sc = figure1_scenario(0.01, period(fig1));
    sc.dynamics = Dynamics::Linearized;
    const Trajectory traj = integrate(sc);
    const LinearSolution exact(fig1, to_perturbation(fig1, sc.initial));
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const Perturbation q = exact(traj.times[i]);
        const Perturbation got = to_perturbation(fig1, traj.states[i]);
        worst = std::max({worst, std::abs(got.eps - q.eps), std::abs(got.eta - q.eta)});
    }
    return {worst <= 1e-8, fmt("sup-norm %.3g <= 1e-8", worst)};
}

Outcome second_order_forms() {
    const double one_period = period(fig1);
    auto residual = [&](double dt) {
        return max_abs_residual(second_order_residuals(fig1, integrate(figure1_scenario(dt, one_period))));
    };
    const double r_fine = residual(0.001);
    const double r_coarse = residual(0.002);
    const double ratio = r_coarse / r_fine;
    return {r_fine <= 1e-4 && ratio >= 3.6 && ratio <= 4.4,
            fmt("residual %.3g <= 1e-4 at dt=0.001, dt 0.002->0.001 ratio %.3f in [3.6, 4.4]",
                r_fine, ratio)};
}

Outcome parameter_roundtrip() {
    const Trajectory run = integrate(figure1_scenario());
    const double clean = worst_relative_error(fit_params(run).params, fig1);
    const double noisy = worst_relative_error(fit_params(with_noise(run, 0.01, 20240917)).params, fig1);
    return {clean <= 0.005 && noisy <= 0.05,
            fmt("worst error %.4f%% <= 0.5%%, with 1%% noise %.3f%% <= 5%%", 100.0 * clean,
                100.0 * noisy)};
}

Outcome averaging_rule() {
    const std::vector<Industry> split = {
        {"low", {1.4, 1.4 * 0.5, 0.05, 0.02}, 1.0, std::nullopt},
        {"high", {1.6, 1.6 * (0.95 / 1.5), 0.05, 0.02}, 1.0, std::nullopt},
    };
    const double kappa = averaged_params(split).kappa;

    const std::vector<Industry> same(3, Industry{"same", fig1, 1.0, std::nullopt});
    const State start{0.02, 0.04};
    const EnsembleResult ens = run_ensemble(same, start, 20.0, 0.01);
    const double diff = sup_state_diff(ens.aggregate, integrate(figure1_scenario()));
    return {kappa == 0.85 && diff <= 1e-12,
            fmt("averaged kappa %.17g == 0.85, identical-industry deviation %.3g <= 1e-12", kappa,
                diff)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"reference period", figure1_period},
        {"quarter-period lag", quarter_period_lag},
        {"marginal stability", marginal_stability},
        {"fixed point", fixed_point},
        {"conservation", conservation},
        {"integrator order", integrator_order},
        {"closed-form solution", closed_form},
        {"second-order forms", second_order_forms},
        {"parameter roundtrip", parameter_roundtrip},
        {"averaging rule", averaging_rule},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
