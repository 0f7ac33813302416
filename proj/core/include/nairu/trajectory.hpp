#pragma once

#include "nairu/model.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace nairu {

enum class Dynamics { Nonlinear, Linearized };

/// Uniformly sampled solution. `params` is empty for series read back from
/// files, where only the sampled states are known.
struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    Dynamics dynamics = Dynamics::Nonlinear;
    std::optional<ModelParams> params;

    [[nodiscard]] std::size_t size() const noexcept { return times.size(); }
    [[nodiscard]] bool empty() const noexcept { return times.empty(); }

    /// Sample spacing; 0 for fewer than two samples.
    [[nodiscard]] double step() const noexcept {
        return times.size() < 2 ? 0.0 : times[1] - times[0];
    }

    [[nodiscard]] std::vector<double> inflation() const;
    [[nodiscard]] std::vector<double> unemployment() const;

    /// At least two samples, positive step, every time within 1e-6 steps of
    /// times[0] + i * step().
    [[nodiscard]] bool is_uniform() const noexcept;
};

}  // namespace nairu
