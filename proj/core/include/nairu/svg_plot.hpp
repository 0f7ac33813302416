#pragma once

#include "nairu/trajectory.hpp"

#include <string>

namespace nairu {

struct PlotOptions {
    int width = 800;
    int height = 480;
    std::string title = "Inflation and unemployment";
};

/// Standalone SVG with inflation and unemployment (in percent) against time
/// (in years). Output depends only on the inputs. Throws FormatError for an
/// empty trajectory.
std::string render_svg(const Trajectory& traj, const PlotOptions& options = {});

}  // namespace nairu
