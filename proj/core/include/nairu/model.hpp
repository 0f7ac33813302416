#pragma once

// Inflation-unemployment dynamics:
//
//   dI/dt = -a (u - n)
//   du/dt = (kappa / a) (I - z) (1 - u)
//
// Time is in years; inflation and unemployment are decimal fractions
// (0.02 means 2 %/year, 0.05 means 5 % unemployment).

#include <array>
#include <cstddef>

namespace nairu {

struct ModelParams {
    double a = 0.0;      ///< inflation response to the unemployment gap, 1/year^2
    double kappa = 0.0;  ///< coupling constant, 1/year^2
    double n = 0.0;      ///< equilibrium unemployment
    double z = 0.0;      ///< equilibrium inflation, 1/year

    /// kappa / a: response of unemployment to an inflation gap.
    [[nodiscard]] constexpr double unemployment_speed() const noexcept { return kappa / a; }

    friend constexpr bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Constants used for the reference business-cycle figure.
inline constexpr ModelParams kFigure1Params{1.5, 0.85, 0.05, 0.02};

struct State {
    double inflation = 0.0;
    double unemployment = 0.0;

    friend constexpr bool operator==(const State&, const State&) = default;
};

/// Deviation from equilibrium: inflation = z + eps, unemployment = n + eta.
struct Perturbation {
    double eps = 0.0;
    double eta = 0.0;

    friend constexpr bool operator==(const Perturbation&, const Perturbation&) = default;
};

struct StateDerivative {
    double d_inflation = 0.0;
    double d_unemployment = 0.0;
};

struct PerturbationDerivative {
    double d_eps = 0.0;
    double d_eta = 0.0;
};

/// Row-major 2x2 matrix acting on (eps, eta).
struct Jacobian2x2 {
    std::array<double, 4> entries{};

    [[nodiscard]] constexpr double operator()(std::size_t row, std::size_t col) const {
        return entries[row * 2 + col];
    }
    [[nodiscard]] constexpr double trace() const { return entries[0] + entries[3]; }
    [[nodiscard]] constexpr double determinant() const {
        return entries[0] * entries[3] - entries[1] * entries[2];
    }
};

/// Returns `p` unchanged or throws DomainError naming the violated constraint.
ModelParams validate_params(const ModelParams& p);

/// Throws DomainError unless 0 <= unemployment < 1 and both fields are finite.
void validate_state(const State& s);

StateDerivative nairu_rhs(const ModelParams& p, const State& s);

/// Same dynamics in perturbation coordinates. Requires n + eta < 1.
PerturbationDerivative perturbation_rhs(const ModelParams& p, const Perturbation& q);

/// Linearization about the equilibrium; the eps*eta coupling is dropped.
PerturbationDerivative linear_rhs(const ModelParams& p, const Perturbation& q) noexcept;

/// [[0, -a], [(kappa/a)(1-n), 0]]
Jacobian2x2 jacobian(const ModelParams& p) noexcept;

Perturbation to_perturbation(const ModelParams& p, const State& s) noexcept;

/// Throws DomainError if the resulting unemployment is outside [0, 1).
State from_perturbation(const ModelParams& p, const Perturbation& q);

}  // namespace nairu
