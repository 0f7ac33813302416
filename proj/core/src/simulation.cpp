#include "nairu/simulation.hpp"

#include "nairu/errors.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <stdexcept>

namespace nairu {

std::string_view to_string(Dynamics d) noexcept {
    return d == Dynamics::Nonlinear ? "nonlinear" : "linearized";
}

State Shock::apply(const State& s) const noexcept {
    State out = s;
    if (set_inflation) {
        out.inflation = *set_inflation;
    }
    if (set_unemployment) {
        out.unemployment = *set_unemployment;
    }
    out.inflation += add_inflation;
    out.unemployment += add_unemployment;
    return out;
}

namespace {

struct Vec2 {
    double x;
    double y;
};

constexpr Vec2 operator+(Vec2 l, Vec2 r) { return {l.x + r.x, l.y + r.y}; }
constexpr Vec2 operator*(double k, Vec2 v) { return {k * v.x, k * v.y}; }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Integrates in either (I, u) or (eps, eta); `unemployment_of` maps the
// integration vector to u for the admissibility check.
class Stepper {
public:
    explicit Stepper(const Scenario& sc) : sc_(sc) {}

    [[nodiscard]] Vec2 to_vec(const State& s) const {
        if (sc_.dynamics == Dynamics::Nonlinear) {
            return {s.inflation, s.unemployment};
        }
        const Perturbation q = to_perturbation(sc_.params, s);
        return {q.eps, q.eta};
    }

    [[nodiscard]] State to_state(Vec2 v) const {
        if (sc_.dynamics == Dynamics::Nonlinear) {
            return {v.x, v.y};
        }
        return {sc_.params.z + v.x, sc_.params.n + v.y};
    }

    Vec2 step(Vec2 y, double t) const {
        const double h = sc_.dt;
        const Vec2 k1 = rhs(y, t);
        const Vec2 k2 = rhs(y + (0.5 * h) * k1, t + 0.5 * h);
        const Vec2 k3 = rhs(y + (0.5 * h) * k2, t + 0.5 * h);
        const Vec2 k4 = rhs(y + h * k3, t + h);
        const Vec2 next = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        check(next, t + h);
        return next;
    }

    void check(Vec2 y, double t) const {
        const double u = sc_.dynamics == Dynamics::Nonlinear ? y.y : sc_.params.n + y.y;
        if (!(u >= 0.0 && u < 1.0) || !std::isfinite(y.x)) {
            throw IntegrationAbort(t, "state left 0 <= u < 1 (u=" + fmt(u) + ")");
        }
    }

private:
    Vec2 rhs(Vec2 y, double t) const {
        check(y, t);
        if (sc_.dynamics == Dynamics::Nonlinear) {
            const StateDerivative d = nairu_rhs(sc_.params, {y.x, y.y});
            return {d.d_inflation, d.d_unemployment};
        }
        const PerturbationDerivative d = linear_rhs(sc_.params, {y.x, y.y});
        return {d.d_eps, d.d_eta};
    }

    const Scenario& sc_;
};

}  // namespace

void validate_scenario(const Scenario& sc) {
    validate_params(sc.params);
    validate_state(sc.initial);
    if (!(std::isfinite(sc.horizon) && sc.horizon > 0.0)) {
        throw DomainError("horizon", "horizon must be positive and finite");
    }
    if (!(std::isfinite(sc.dt) && sc.dt > 0.0)) {
        throw DomainError("dt", "dt must be positive and finite");
    }
    if (sc.dt > sc.horizon) {
        throw DomainError("dt", "dt must not exceed the horizon");
    }
    if (sc.record_every < 1) {
        throw DomainError("record_every", "record_every must be a positive integer");
    }
    double previous = 0.0;
    for (const Shock& shock : sc.shocks) {
        if (!std::isfinite(shock.time) || shock.time < 0.0 || shock.time > sc.horizon) {
            throw DomainError("shocks", "shock time " + fmt(shock.time) +
                                            " lies outside [0, horizon]");
        }
        if (shock.time < previous) {
            throw DomainError("shocks", "shocks must be sorted by time");
        }
        previous = shock.time;
    }
}

long long step_count(const Scenario& sc) {
    return std::llround(sc.horizon / sc.dt);
}

Trajectory integrate(const Scenario& sc) {
    validate_scenario(sc);
    const long long steps = step_count(sc);
    const Stepper stepper(sc);

    Trajectory traj;
    traj.dynamics = sc.dynamics;
    traj.params = sc.params;
    const auto samples = static_cast<std::size_t>(steps / sc.record_every + 1);
    traj.times.reserve(samples);
    traj.states.reserve(samples);

    auto shock = sc.shocks.begin();
    State state = sc.initial;
    Vec2 y = stepper.to_vec(state);
    for (long long k = 0;; ++k) {
        const double t = static_cast<double>(k) * sc.dt;
        bool shocked = false;
        while (shock != sc.shocks.end() && std::llround(shock->time / sc.dt) == k) {
            state = shock->apply(state);
            shocked = true;
            ++shock;
        }
        if (shocked) {
            try {
                validate_state(state);
            } catch (const DomainError& e) {
                throw IntegrationAbort(t, std::string("shock produced an invalid state: ") +
                                              e.what());
            }
            y = stepper.to_vec(state);
        }
        if (k % sc.record_every == 0) {
            traj.times.push_back(t);
            traj.states.push_back(state);
        }
        if (k == steps) {
            break;
        }
        y = stepper.step(y, t);
        state = stepper.to_state(y);
    }
    return traj;
}

double conserved_quantity(const ModelParams& p, const State& s, Dynamics dynamics) {
    if (!(s.unemployment < 1.0)) {
        throw DomainError("unemployment", "conserved quantity requires u < 1");
    }
    const Perturbation q = to_perturbation(p, s);
    if (dynamics == Dynamics::Linearized) {
        return p.kappa * (1.0 - p.n) * q.eps * q.eps / (p.a * p.a) + q.eta * q.eta;
    }
    // -(u - n) - (1 - n) ln((1 - u)/(1 - n)) written as (1 - n)(-x - log1p(-x)),
    // x = eta / (1 - n), to avoid cancellation near equilibrium.
    const double x = q.eta / (1.0 - p.n);
    const double potential = (1.0 - p.n) * (-x - std::log1p(-x));
    return p.kappa / (2.0 * p.a) * q.eps * q.eps + p.a * potential;
}

ModelParams averaged_params(std::span<const Industry> industries) {
    if (industries.empty()) {
        throw std::invalid_argument("ensemble needs at least one industry");
    }
    double total = 0.0;
    double a = 0.0;
    double speed = 0.0;
    double n = 0.0;
    double z = 0.0;
    for (const Industry& ind : industries) {
        validate_params(ind.params);
        if (!(std::isfinite(ind.weight) && ind.weight > 0.0)) {
            throw DomainError("weight", "industry '" + ind.label + "' needs a positive weight");
        }
        total += ind.weight;
        a += ind.weight * ind.params.a;
        speed += ind.weight * ind.params.unemployment_speed();
        n += ind.weight * ind.params.n;
        z += ind.weight * ind.params.z;
    }
    a /= total;
    speed /= total;
    return validate_params({a, a * speed, n / total, z / total});
}

EnsembleResult run_ensemble(std::span<const Industry> industries, const State& initial,
                            double horizon, double dt) {
    const ModelParams mean_params = averaged_params(industries);

    std::vector<std::future<Trajectory>> jobs;
    jobs.reserve(industries.size());
    for (const Industry& ind : industries) {
        Scenario sc;
        sc.params = ind.params;
        sc.initial = ind.initial.value_or(initial);
        sc.horizon = horizon;
        sc.dt = dt;
        sc.dynamics = Dynamics::Nonlinear;
        jobs.push_back(std::async(std::launch::async, [sc] { return integrate(sc); }));
    }

    EnsembleResult result;
    result.members.reserve(industries.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const std::string& label = industries[i].label;
        try {
            result.members.push_back(jobs[i].get());
        } catch (const IntegrationAbort& e) {
            throw IntegrationAbort(e.time(), "industry '" + label + "': " + e.detail());
        } catch (const DomainError& e) {
            throw DomainError(e.field(), "industry '" + label + "': " + e.what());
        }
    }

    double total = 0.0;
    for (const Industry& ind : industries) {
        total += ind.weight;
    }
    Trajectory& agg = result.aggregate;
    agg.dynamics = Dynamics::Nonlinear;
    agg.params = mean_params;
    agg.times = result.members.front().times;
    agg.states.assign(agg.times.size(), State{0.0, 0.0});
    for (std::size_t m = 0; m < result.members.size(); ++m) {
        const double w = industries[m].weight / total;
        const auto& states = result.members[m].states;
        for (std::size_t i = 0; i < states.size(); ++i) {
            agg.states[i].inflation += w * states[i].inflation;
            agg.states[i].unemployment += w * states[i].unemployment;
        }
    }
    return result;
}

}  // namespace nairu
