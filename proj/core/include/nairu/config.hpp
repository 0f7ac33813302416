#pragma once

// Scenario configuration files (YAML).
//
//   params:       {a: 1.5, kappa: 0.85, n: 0.05, z: 0.02}
//   initial:      {inflation: 0.02, unemployment: 0.04}
//   horizon:      20          # years, default 20
//   dt:           0.01        # years, default 0.01
//   dynamics:     nonlinear   # or linearized
//   record_every: 1
//   shocks:
//     - {time: 5, set_inflation: 0.04, add_unemployment: -0.005}
//   industries:
//     - {label: auto, params: {...}, weight: 1, initial: {...}}
//   analysis:
//     re_tolerance: 1.0e-12
//
// `params` may be omitted when `industries` is given; the scenario then uses
// the averaged industry parameters. Unknown keys are rejected.

#include "nairu/simulation.hpp"
#include "nairu/stability.hpp"

#include <filesystem>
#include <string_view>
#include <vector>

namespace nairu {

struct AnalysisOptions {
    double re_tolerance = kDefaultReTolerance;
};

struct ScenarioConfig {
    Scenario scenario;
    std::vector<Industry> industries;
    AnalysisOptions analysis;
};

/// Throws ParseError (syntax, unknown or missing keys, wrong types) or
/// DomainError (values outside the model's domain).
ScenarioConfig parse_config(std::string_view text);

/// Reads and parses a file; an unreadable file is a ParseError at line 0.
ScenarioConfig load_config(const std::filesystem::path& path);

}  // namespace nairu
