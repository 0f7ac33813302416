#pragma once

// Cycle statistics and parameter recovery from sampled trajectories.

#include "nairu/model.hpp"
#include "nairu/trajectory.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace nairu {

enum class Field { Inflation, Unemployment };

struct CycleStats {
    double period = 0.0;     ///< years
    double phase_lag = 0.0;  ///< years by which unemployment trails inflation
    double amplitude_inflation = 0.0;
    double amplitude_unemployment = 0.0;
    double mean_inflation = 0.0;
    double mean_unemployment = 0.0;
};

struct FitResult {
    ModelParams params;
    double residual_inflation_eq = 0.0;     ///< rms residual of the dI/dt regression
    double residual_unemployment_eq = 0.0;  ///< rms residual of the du/dt regression
    std::size_t samples_used = 0;
};

/// Mean spacing of upward crossings of the series mean, crossing instants
/// located by linear interpolation. Needs at least two crossings.
double mean_crossing_period(std::span<const double> x, double dt);

/// Lag in [0, max_lag) maximizing the Pearson correlation between
/// `lead[i]` and `lagging[i + k]`, refined by a parabola through the peak.
/// All lags share one window, trimmed to whole multiples of `period` when
/// `period` > 0 so that partial cycles do not bias the peak.
double cross_correlation_lag(std::span<const double> lead, std::span<const double> lagging,
                             double dt, double max_lag, double period = 0.0);

double estimate_period(const Trajectory& traj, Field field);

/// Estimated from the inflation period; the result lies in [0, period).
double estimate_phase_lag(const Trajectory& traj);

/// Half the peak-to-peak range over the leading whole number of periods.
double estimate_amplitude(const Trajectory& traj, Field field, double period);

/// As above with the period estimated from the same field. A constant series
/// has amplitude 0.
double estimate_amplitude(const Trajectory& traj, Field field);

CycleStats analyze_cycles(const Trajectory& traj);

/// Least-squares recovery of (a, kappa, n, z) from central-difference
/// derivatives:
///   dI/dt          = -a u + a n             (slope -a, intercept a n)
///   (du/dt)/(1-u)  = r I - r z,  r = kappa/a
/// End samples are excluded.
FitResult fit_params(const Trajectory& traj);

}  // namespace nairu
