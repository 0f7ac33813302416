#include "nairu/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nairu {

std::string_view to_string(Classification c) noexcept {
    switch (c) {
        case Classification::Stable:
            return "stable";
        case Classification::MarginallyStable:
            return "marginally-stable";
        case Classification::Unstable:
            return "unstable";
    }
    return "unknown";
}

double natural_frequency(const ModelParams& p) noexcept {
    return std::sqrt(p.kappa * (1.0 - p.n));
}

std::array<ComplexValue, 2> eigenvalues(const ModelParams& p) noexcept {
    const double omega = natural_frequency(p);
    return {ComplexValue{0.0, omega}, ComplexValue{0.0, -omega}};
}

Classification classify(const std::array<ComplexValue, 2>& lambda, double re_tolerance) {
    if (!(re_tolerance >= 0.0)) {
        throw std::invalid_argument("re_tolerance must be non-negative");
    }
    const double max_re = std::max(lambda[0].real(), lambda[1].real());
    if (max_re < -re_tolerance) {
        return Classification::Stable;
    }
    if (max_re > re_tolerance) {
        return Classification::Unstable;
    }
    return Classification::MarginallyStable;
}

Classification classify(const ModelParams& p, double re_tolerance) {
    return classify(eigenvalues(p), re_tolerance);
}

namespace {
double period_from_omega(double omega) noexcept {
    if (omega == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 2.0 * std::numbers::pi / omega;
}
}  // namespace

double period(const ModelParams& p) noexcept { return period_from_omega(natural_frequency(p)); }

double phase_lag(const ModelParams& p) noexcept { return period(p) / 4.0; }

double geometric_mean_speed(const ModelParams& p) noexcept {
    return std::sqrt(p.a * p.unemployment_speed());
}

LinearSolution::LinearSolution(const ModelParams& p, const Perturbation& initial)
    : params_(p),
      initial_(initial),
      omega_(natural_frequency(p)),
      eps_cos_(initial.eps),
      eps_sin_(-p.a * initial.eta / omega_),
      eta_cos_(initial.eta),
      eta_sin_(omega_ * initial.eps / p.a) {}

Perturbation LinearSolution::operator()(double t) const noexcept {
    if (t == 0.0) {
        return initial_;
    }
    const double c = std::cos(omega_ * t);
    const double s = std::sin(omega_ * t);
    return {eps_cos_ * c + eps_sin_ * s, eta_cos_ * c + eta_sin_ * s};
}

Perturbation LinearSolution::derivative(double t) const noexcept {
    const double c = std::cos(omega_ * t);
    const double s = std::sin(omega_ * t);
    return {omega_ * (eps_sin_ * c - eps_cos_ * s), omega_ * (eta_sin_ * c - eta_cos_ * s)};
}

LinearSolution linear_solution(const ModelParams& p, const Perturbation& initial) {
    return LinearSolution(p, initial);
}

Amplitudes amplitudes(const ModelParams& p, const Perturbation& initial) noexcept {
    const double omega = natural_frequency(p);
    return {std::hypot(initial.eps, p.a * initial.eta / omega),
            std::hypot(initial.eta, omega * initial.eps / p.a)};
}

StabilityReport StabilityReport::from_eigenvalues(const std::array<ComplexValue, 2>& lambda,
                                                  double re_tolerance) {
    StabilityReport r;
    r.eigenvalues = lambda;
    r.classification = classify(lambda, re_tolerance);
    r.omega = std::abs(lambda[0].imag());
    r.period = period_from_omega(r.omega);
    r.phase_lag = r.period / 4.0;
    return r;
}

StabilityReport stability_report(const ModelParams& p, const Perturbation& initial,
                                 double re_tolerance) {
    StabilityReport r = StabilityReport::from_eigenvalues(eigenvalues(p), re_tolerance);
    const Amplitudes amp = amplitudes(p, initial);
    r.amplitude_inflation = amp.inflation;
    r.amplitude_unemployment = amp.unemployment;
    return r;
}

}  // namespace nairu
