#pragma once

// Decoupled second-order forms of the perturbation system, used only to
// cross-check sampled trajectories. Differentiating d(eps)/dt = -a eta and
// d(eta)/dt = (kappa/a) eps (1 - n - eta) once more and eliminating the
// partner variable gives
//
//   eps'' = -kappa eps (1 - n + eps'/a)
//   eta'' = -kappa eta (1 - n - eta) - eta'^2 / (1 - n - eta)
//
// A commonly reproduced printed version of these reads eps/a in place of
// eps'/a, (1 - n + eta) in place of (1 - n - eta) and eta^2 in place of
// eta'^2. `printed_second_order_rhs` evaluates that version so tests can
// show it is inconsistent with the first-order system.

#include "nairu/model.hpp"
#include "nairu/trajectory.hpp"

#include <vector>

namespace nairu {

struct SecondDerivative {
    double eps_ddot = 0.0;
    double eta_ddot = 0.0;
};

/// Corrected right-hand sides; `rate` holds (eps', eta').
SecondDerivative second_order_rhs(const ModelParams& p, const Perturbation& q,
                                  const Perturbation& rate);

/// The printed (inconsistent) right-hand sides.
SecondDerivative printed_second_order_rhs(const ModelParams& p, const Perturbation& q,
                                          const Perturbation& rate);

enum class SecondOrderForm { Corrected, Printed };

struct SecondOrderResidual {
    double time = 0.0;
    double eps = 0.0;  ///< finite-difference eps'' minus the right-hand side
    double eta = 0.0;
};

/// Residuals at every interior sample of a uniformly sampled trajectory.
/// First and second derivatives come from central differences of the samples.
/// Throws DomainError if 1 - n - eta vanishes, AnalysisError for fewer than
/// three samples or non-uniform spacing.
std::vector<SecondOrderResidual> second_order_residuals(
    const ModelParams& p, const Trajectory& traj,
    SecondOrderForm form = SecondOrderForm::Corrected);

}  // namespace nairu
