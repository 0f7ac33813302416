#include "nairu/analysis.hpp"

#include "nairu/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace nairu {

namespace {

std::vector<double> select(const Trajectory& traj, Field field) {
    return field == Field::Inflation ? traj.inflation() : traj.unemployment();
}

void require_uniform(const Trajectory& traj) {
    if (!traj.is_uniform()) {
        throw AnalysisError("trajectory must have at least two uniformly spaced samples");
    }
}

double mean(std::span<const double> x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double pearson(std::span<const double> x, std::span<const double> y) {
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    double xx = 0.0;
    double yy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
        xx += x[i] * x[i];
        yy += y[i] * y[i];
    }
    // Relative thresholds absorb the rounding residue of a constant series.
    if (!(sxx > 1e-24 * xx) || !(syy > 1e-24 * yy)) {
        throw AnalysisError("cross-correlation of a constant series is undefined");
    }
    return sxy / std::sqrt(sxx * syy);
}

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms = 0.0;
};

LineFit ordinary_least_squares(std::span<const double> x, std::span<const double> y,
                               const char* what) {
    const double mx = mean(x);
    const double my = mean(y);
    double sxx = 0.0;
    double sxy = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        scale += x[i] * x[i];
    }
    if (!(sxx > 1e-24 * scale)) {
        throw AnalysisError(std::string("regression for ") + what +
                            " is rank-deficient (constant regressor)");
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss += r * r;
    }
    fit.rms = std::sqrt(ss / static_cast<double>(x.size()));
    return fit;
}

// Index one past the last sample inside the leading whole periods.
std::size_t whole_period_end(const Trajectory& traj, double period) {
    const double span = traj.times.back() - traj.times.front();
    const double h = traj.step();
    if (!(period > 0.0) || span + 1e-9 * h < period) {
        throw AnalysisError("series spans less than one period");
    }
    const double cycles = std::floor(span / period + 1e-9);
    const auto last = static_cast<std::size_t>(std::floor(cycles * period / h + 1e-6));
    return std::min(last + 1, traj.size());
}

}  // namespace

double mean_crossing_period(std::span<const double> x, double dt) {
    if (x.size() < 3) {
        throw AnalysisError("period estimation needs at least three samples");
    }
    const double level = mean(x);
    std::vector<double> crossings;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i - 1] < level && x[i] >= level) {
            const double frac = (level - x[i - 1]) / (x[i] - x[i - 1]);
            crossings.push_back((static_cast<double>(i - 1) + frac) * dt);
        }
    }
    if (crossings.size() < 2) {
        throw AnalysisError("fewer than two upward mean-crossings; series too short or constant");
    }
    return (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
}

double cross_correlation_lag(std::span<const double> lead, std::span<const double> lagging,
                             double dt, double max_lag, double period) {
    if (lead.size() != lagging.size()) {
        throw AnalysisError("cross-correlation needs series of equal length");
    }
    const std::size_t n = lead.size();
    const auto lags = static_cast<std::size_t>(std::max(1.0, std::floor(max_lag / dt)));
    if (n < lags + 3) {
        throw AnalysisError("series too short for the requested lag range");
    }
    std::size_t window = n - lags - 1;
    if (period > 0.0) {
        const double per_samples = period / dt;
        const double whole = std::floor(static_cast<double>(window) / per_samples);
        if (whole >= 1.0) {
            window = static_cast<std::size_t>(std::llround(whole * per_samples));
            window = std::min(window, n - lags - 1);
        }
    }

    // r[j] holds the correlation at lag j - 1, j = 0 .. lags + 1.
    std::vector<double> r(lags + 2);
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (j == 0) {
            r[j] = pearson(lead.subspan(1, window), lagging.subspan(0, window));
        } else {
            r[j] = pearson(lead.subspan(0, window), lagging.subspan(j - 1, window));
        }
    }
    const auto best = static_cast<std::size_t>(
        std::max_element(r.begin() + 1, r.begin() + 1 + static_cast<std::ptrdiff_t>(lags)) -
        r.begin());
    const double left = r[best - 1];
    const double mid = r[best];
    const double right = r[best + 1];
    const double curvature = left - 2.0 * mid + right;
    double offset = 0.0;
    if (curvature < 0.0) {
        offset = std::clamp(0.5 * (left - right) / curvature, -0.5, 0.5);
    }
    return std::max(0.0, (static_cast<double>(best - 1) + offset) * dt);
}

double estimate_period(const Trajectory& traj, Field field) {
    require_uniform(traj);
    return mean_crossing_period(select(traj, field), traj.step());
}

double estimate_phase_lag(const Trajectory& traj) {
    const double p = estimate_period(traj, Field::Inflation);
    const std::vector<double> infl = traj.inflation();
    const std::vector<double> unemp = traj.unemployment();
    return cross_correlation_lag(infl, unemp, traj.step(), p, p);
}

double estimate_amplitude(const Trajectory& traj, Field field, double period) {
    require_uniform(traj);
    const std::size_t end = whole_period_end(traj, period);
    const std::vector<double> x = select(traj, field);
    const auto [lo, hi] = std::minmax_element(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(end));
    return 0.5 * (*hi - *lo);
}

double estimate_amplitude(const Trajectory& traj, Field field) {
    require_uniform(traj);
    const std::vector<double> x = select(traj, field);
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*lo == *hi) {
        return 0.0;
    }
    return estimate_amplitude(traj, field, mean_crossing_period(x, traj.step()));
}

CycleStats analyze_cycles(const Trajectory& traj) {
    CycleStats stats;
    stats.period = estimate_period(traj, Field::Inflation);
    stats.phase_lag = estimate_phase_lag(traj);
    stats.amplitude_inflation = estimate_amplitude(traj, Field::Inflation, stats.period);
    stats.amplitude_unemployment = estimate_amplitude(traj, Field::Unemployment, stats.period);

    const std::size_t end = whole_period_end(traj, stats.period);
    const std::span<const State> window(traj.states.data(), end);
    for (const State& s : window) {
        stats.mean_inflation += s.inflation;
        stats.mean_unemployment += s.unemployment;
    }
    stats.mean_inflation /= static_cast<double>(end);
    stats.mean_unemployment /= static_cast<double>(end);
    return stats;
}

FitResult fit_params(const Trajectory& traj) {
    require_uniform(traj);
    if (traj.size() < 5) {
        throw AnalysisError("parameter fit needs at least five samples");
    }
    const double h = traj.step();
    const std::size_t m = traj.size() - 2;

    std::vector<double> infl(m);
    std::vector<double> unemp(m);
    std::vector<double> d_infl(m);
    std::vector<double> scaled_d_unemp(m);
    for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
        const State& prev = traj.states[i - 1];
        const State& cur = traj.states[i];
        const State& next = traj.states[i + 1];
        if (!(cur.unemployment < 1.0)) {
            throw AnalysisError("unemployment sample at or above 1");
        }
        infl[i - 1] = cur.inflation;
        unemp[i - 1] = cur.unemployment;
        d_infl[i - 1] = (next.inflation - prev.inflation) / (2.0 * h);
        scaled_d_unemp[i - 1] =
            (next.unemployment - prev.unemployment) / (2.0 * h) / (1.0 - cur.unemployment);
    }

    const LineFit first = ordinary_least_squares(unemp, d_infl, "dI/dt on u");
    const LineFit second = ordinary_least_squares(infl, scaled_d_unemp, "(du/dt)/(1-u) on I");

    const double a = -first.slope;
    const double speed = second.slope;
    if (!(a != 0.0 && speed != 0.0)) {
        throw AnalysisError("fitted slopes vanish; parameters are not identifiable");
    }
    FitResult fit;
    fit.params = {a, a * speed, first.intercept / a, -second.intercept / speed};
    try {
        validate_params(fit.params);
    } catch (const DomainError& e) {
        throw AnalysisError(std::string("fitted parameters are invalid: ") + e.what());
    }
    fit.residual_inflation_eq = first.rms;
    fit.residual_unemployment_eq = second.rms;
    fit.samples_used = m;
    return fit;
}

}  // namespace nairu
