#include "nairu/second_order.hpp"

#include "nairu/errors.hpp"

#include <cmath>

namespace nairu {

namespace {
double gap_or_throw(const ModelParams& p, double eta) {
    const double gap = 1.0 - p.n - eta;
    if (gap == 0.0 || !std::isfinite(gap)) {
        throw DomainError("eta", "1 - n - eta vanishes");
    }
    return gap;
}
}  // namespace

SecondDerivative second_order_rhs(const ModelParams& p, const Perturbation& q,
                                  const Perturbation& rate) {
    const double gap = gap_or_throw(p, q.eta);
    return {-p.kappa * q.eps * (1.0 - p.n + rate.eps / p.a),
            -p.kappa * q.eta * gap - rate.eta * rate.eta / gap};
}

SecondDerivative printed_second_order_rhs(const ModelParams& p, const Perturbation& q,
                                          const Perturbation& rate) {
    (void)rate;
    const double gap = gap_or_throw(p, q.eta);
    return {-p.kappa * q.eps * (1.0 - p.n + q.eps / p.a),
            -p.kappa * q.eta * (1.0 - p.n + q.eta) - q.eta * q.eta / gap};
}

std::vector<SecondOrderResidual> second_order_residuals(const ModelParams& p,
                                                        const Trajectory& traj,
                                                        SecondOrderForm form) {
    if (traj.size() < 3) {
        throw AnalysisError("second-order residuals need at least three samples");
    }
    if (!traj.is_uniform()) {
        throw AnalysisError("second-order residuals need uniformly spaced samples");
    }
    const double h = traj.step();

    std::vector<Perturbation> q(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        q[i] = to_perturbation(p, traj.states[i]);
    }

    std::vector<SecondOrderResidual> out;
    out.reserve(traj.size() - 2);
    for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
        const Perturbation rate{(q[i + 1].eps - q[i - 1].eps) / (2.0 * h),
                                (q[i + 1].eta - q[i - 1].eta) / (2.0 * h)};
        const double eps_dd = (q[i + 1].eps - 2.0 * q[i].eps + q[i - 1].eps) / (h * h);
        const double eta_dd = (q[i + 1].eta - 2.0 * q[i].eta + q[i - 1].eta) / (h * h);
        const SecondDerivative rhs = form == SecondOrderForm::Corrected
                                         ? second_order_rhs(p, q[i], rate)
                                         : printed_second_order_rhs(p, q[i], rate);
        out.push_back({traj.times[i], eps_dd - rhs.eps_ddot, eta_dd - rhs.eta_ddot});
    }
    return out;
}

}  // namespace nairu
