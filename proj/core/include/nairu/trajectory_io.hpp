#pragma once

// Trajectory files: CSV with the header
//
//   t,inflation,unemployment,eps,eta,conserved
//
// LF line endings, shortest round-trip decimal representation of every value.

#include "nairu/trajectory.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nairu {

inline constexpr std::string_view kTrajectoryHeader = "t,inflation,unemployment,eps,eta,conserved";

struct TrajectoryRecord {
    double t = 0.0;
    double inflation = 0.0;
    double unemployment = 0.0;
    double eps = 0.0;  ///< inflation - z
    double eta = 0.0;  ///< unemployment - n
    double conserved = 0.0;
};

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

/// Requires `traj.params`; the conserved column uses `traj.dynamics`.
std::vector<TrajectoryRecord> to_records(const Trajectory& traj);

void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Throws FormatError with the offending line number. The returned trajectory
/// carries no params.
Trajectory read_trajectory_csv(std::istream& in);

}  // namespace nairu
