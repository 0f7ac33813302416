#pragma once

#include "nairu/model.hpp"

#include <array>
#include <complex>
#include <string_view>

namespace nairu {

using ComplexValue = std::complex<double>;

enum class Classification { Stable, MarginallyStable, Unstable };

[[nodiscard]] std::string_view to_string(Classification c) noexcept;

inline constexpr double kDefaultReTolerance = 1e-12;

/// Eigenvalues of the Jacobian, +i*omega first.
std::array<ComplexValue, 2> eigenvalues(const ModelParams& p) noexcept;

/// Classification from an arbitrary eigenvalue pair.
Classification classify(const std::array<ComplexValue, 2>& lambda,
                        double re_tolerance = kDefaultReTolerance);

Classification classify(const ModelParams& p, double re_tolerance = kDefaultReTolerance);

/// omega = sqrt(kappa (1 - n)), radians/year.
double natural_frequency(const ModelParams& p) noexcept;

/// 2 pi / omega; +inf when omega underflows to zero.
double period(const ModelParams& p) noexcept;

/// Time by which unemployment trails inflation: period / 4.
double phase_lag(const ModelParams& p) noexcept;

/// sqrt(a * kappa/a), i.e. sqrt(kappa).
double geometric_mean_speed(const ModelParams& p) noexcept;

/// Closed-form solution of the linearized system
///
///   eps(t) = eps0 cos(wt) - (a eta0 / w) sin(wt)
///   eta(t) = eta0 cos(wt) + (w eps0 / a) sin(wt)
///
/// stored in the cos/sin basis.
class LinearSolution {
public:
    LinearSolution(const ModelParams& p, const Perturbation& initial);

    [[nodiscard]] Perturbation operator()(double t) const noexcept;
    [[nodiscard]] Perturbation derivative(double t) const noexcept;

    [[nodiscard]] const ModelParams& params() const noexcept { return params_; }
    [[nodiscard]] const Perturbation& initial() const noexcept { return initial_; }
    [[nodiscard]] double omega() const noexcept { return omega_; }

    /// Coefficients (eps_cos, eps_sin, eta_cos, eta_sin).
    [[nodiscard]] std::array<double, 4> coefficients() const noexcept {
        return {eps_cos_, eps_sin_, eta_cos_, eta_sin_};
    }

private:
    ModelParams params_;
    Perturbation initial_;
    double omega_;
    double eps_cos_, eps_sin_, eta_cos_, eta_sin_;
};

LinearSolution linear_solution(const ModelParams& p, const Perturbation& initial);

struct Amplitudes {
    double inflation = 0.0;
    double unemployment = 0.0;
};

/// Oscillation amplitudes of the linear solution through `initial`.
Amplitudes amplitudes(const ModelParams& p, const Perturbation& initial) noexcept;

struct StabilityReport {
    std::array<ComplexValue, 2> eigenvalues{};
    Classification classification = Classification::MarginallyStable;
    double omega = 0.0;
    double period = 0.0;
    double phase_lag = 0.0;
    double amplitude_inflation = 0.0;
    double amplitude_unemployment = 0.0;

    /// Build a report from an externally supplied eigenvalue pair. Frequency
    /// and period follow |im(lambda_1)|; amplitudes are left at zero.
    static StabilityReport from_eigenvalues(const std::array<ComplexValue, 2>& lambda,
                                            double re_tolerance = kDefaultReTolerance);
};

StabilityReport stability_report(const ModelParams& p, const Perturbation& initial,
                                 double re_tolerance = kDefaultReTolerance);

}  // namespace nairu
