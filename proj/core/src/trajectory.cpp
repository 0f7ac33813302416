#include "nairu/trajectory.hpp"

#include <cmath>

namespace nairu {

std::vector<double> Trajectory::inflation() const {
    std::vector<double> out;
    out.reserve(states.size());
    for (const State& s : states) {
        out.push_back(s.inflation);
    }
    return out;
}

std::vector<double> Trajectory::unemployment() const {
    std::vector<double> out;
    out.reserve(states.size());
    for (const State& s : states) {
        out.push_back(s.unemployment);
    }
    return out;
}

bool Trajectory::is_uniform() const noexcept {
    if (times.size() < 2 || states.size() != times.size()) {
        return false;
    }
    const double h = step();
    if (!(h > 0.0)) {
        return false;
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double expected = times[0] + static_cast<double>(i) * h;
        if (std::abs(times[i] - expected) > 1e-6 * h) {
            return false;
        }
    }
    return true;
}

}  // namespace nairu
