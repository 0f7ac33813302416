#pragma once

#include "nairu/model.hpp"
#include "nairu/trajectory.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nairu {

[[nodiscard]] std::string_view to_string(Dynamics d) noexcept;

/// Replaces and/or offsets the state at the step boundary nearest `time`.
/// Set-values are applied first, then the offsets.
struct Shock {
    double time = 0.0;
    std::optional<double> set_inflation;
    std::optional<double> set_unemployment;
    double add_inflation = 0.0;
    double add_unemployment = 0.0;

    [[nodiscard]] State apply(const State& s) const noexcept;
};

struct Scenario {
    ModelParams params;
    State initial;
    double horizon = 20.0;
    double dt = 0.01;
    Dynamics dynamics = Dynamics::Nonlinear;
    std::vector<Shock> shocks;
    int record_every = 1;
};

/// Throws DomainError for invalid params, initial state, step sizes or shocks.
void validate_scenario(const Scenario& sc);

/// Number of fixed RK4 steps taken for `sc`: round(horizon / dt).
[[nodiscard]] long long step_count(const Scenario& sc);

/// Classical fixed-step RK4. Nonlinear scenarios integrate the full system in
/// (I, u); linearized ones integrate the linear system in (eps, eta) and map
/// back. Every RK stage is checked against 0 <= u < 1; a violation throws
/// IntegrationAbort carrying the offending time.
Trajectory integrate(const Scenario& sc);

/// First integral of the chosen dynamics, zero at equilibrium.
///
/// Nonlinear:  H = (kappa / 2a) (I - z)^2 + a (-(u - n) - (1 - n) ln((1 - u) / (1 - n)))
/// Linearized: C = kappa (1 - n) eps^2 / a^2 + eta^2
double conserved_quantity(const ModelParams& p, const State& s, Dynamics dynamics);

struct Industry {
    std::string label;
    ModelParams params;
    double weight = 1.0;
    std::optional<State> initial;  ///< overrides the shared initial state
};

struct EnsembleResult {
    std::vector<Trajectory> members;  ///< in input order
    Trajectory aggregate;             ///< weighted mean; params = averaged_params
};

/// Integrates every industry (nonlinear dynamics) and averages the states
/// sample by sample with normalized weights. Members run concurrently.
/// A member failure is rethrown with the industry label prefixed.
EnsembleResult run_ensemble(std::span<const Industry> industries, const State& initial,
                            double horizon, double dt);

/// Weighted arithmetic means of a, kappa/a, n and z; kappa is rebuilt as
/// mean(a) * mean(kappa/a).
ModelParams averaged_params(std::span<const Industry> industries);

}  // namespace nairu
