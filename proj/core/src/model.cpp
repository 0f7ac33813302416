#include "nairu/model.hpp"

#include "nairu/errors.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace nairu {

namespace {
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace

ModelParams validate_params(const ModelParams& p) {
    if (!std::isfinite(p.a)) {
        throw DomainError("a", "parameter a must be finite");
    }
    if (!std::isfinite(p.kappa)) {
        throw DomainError("kappa", "parameter kappa must be finite");
    }
    if (!std::isfinite(p.n)) {
        throw DomainError("n", "parameter n must be finite");
    }
    if (!std::isfinite(p.z)) {
        throw DomainError("z", "parameter z must be finite");
    }
    if (p.a <= 0.0) {
        throw DomainError("a", "parameter a must satisfy a > 0 (got " + num(p.a) + ")");
    }
    if (p.kappa <= 0.0) {
        throw DomainError("kappa",
                          "parameter kappa must satisfy kappa > 0 (got " + num(p.kappa) + ")");
    }
    if (!(p.n > 0.0 && p.n < 1.0)) {
        throw DomainError("n", "parameter n must satisfy 0 < n < 1 (got " + num(p.n) + ")");
    }
    return p;
}

void validate_state(const State& s) {
    if (!std::isfinite(s.inflation)) {
        throw DomainError("inflation", "inflation must be finite");
    }
    if (!std::isfinite(s.unemployment) || s.unemployment < 0.0 || s.unemployment >= 1.0) {
        throw DomainError("unemployment",
                          "unemployment must satisfy 0 <= u < 1 (got " + num(s.unemployment) + ")");
    }
}

StateDerivative nairu_rhs(const ModelParams& p, const State& s) {
    if (!(s.unemployment < 1.0)) {
        throw DomainError("unemployment", "unemployment must satisfy u < 1 (got " +
                                              num(s.unemployment) + ")");
    }
    return {-p.a * (s.unemployment - p.n),
            p.unemployment_speed() * (s.inflation - p.z) * (1.0 - s.unemployment)};
}

PerturbationDerivative perturbation_rhs(const ModelParams& p, const Perturbation& q) {
    if (!(p.n + q.eta < 1.0)) {
        throw DomainError("eta", "perturbation must satisfy n + eta < 1 (got eta=" +
                                     num(q.eta) + ")");
    }
    return {-p.a * q.eta, p.unemployment_speed() * q.eps * (1.0 - p.n - q.eta)};
}

PerturbationDerivative linear_rhs(const ModelParams& p, const Perturbation& q) noexcept {
    return {-p.a * q.eta, p.unemployment_speed() * (1.0 - p.n) * q.eps};
}

Jacobian2x2 jacobian(const ModelParams& p) noexcept {
    return {{0.0, -p.a, p.unemployment_speed() * (1.0 - p.n), 0.0}};
}

Perturbation to_perturbation(const ModelParams& p, const State& s) noexcept {
    return {s.inflation - p.z, s.unemployment - p.n};
}

State from_perturbation(const ModelParams& p, const Perturbation& q) {
    State s{p.z + q.eps, p.n + q.eta};
    validate_state(s);
    return s;
}

}  // namespace nairu
