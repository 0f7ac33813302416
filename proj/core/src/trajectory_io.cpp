#include "nairu/trajectory_io.hpp"

#include "nairu/errors.hpp"
#include "nairu/simulation.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace nairu {

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::vector<TrajectoryRecord> to_records(const Trajectory& traj) {
    if (!traj.params) {
        throw std::invalid_argument("trajectory records need the model parameters");
    }
    const ModelParams& p = *traj.params;
    std::vector<TrajectoryRecord> rows;
    rows.reserve(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const State& s = traj.states[i];
        rows.push_back({traj.times[i], s.inflation, s.unemployment, s.inflation - p.z,
                        s.unemployment - p.n, conserved_quantity(p, s, traj.dynamics)});
    }
    return rows;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << kTrajectoryHeader << '\n';
    for (const TrajectoryRecord& r : to_records(traj)) {
        out << format_double(r.t) << ',' << format_double(r.inflation) << ','
            << format_double(r.unemployment) << ',' << format_double(r.eps) << ','
            << format_double(r.eta) << ',' << format_double(r.conserved) << '\n';
    }
}

namespace {
double parse_field(std::string_view text, std::size_t line) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != end) {
        throw FormatError("line " + std::to_string(line) + ": invalid number '" +
                          std::string(text) + "'");
    }
    return v;
}
}  // namespace

Trajectory read_trajectory_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError("empty trajectory file");
    }
    if (line != kTrajectoryHeader) {
        throw FormatError("line 1: expected header '" + std::string(kTrajectoryHeader) + "'");
    }
    Trajectory traj;
    std::size_t number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (in.eof()) {
            throw FormatError("line " + std::to_string(number) +
                              ": truncated record (missing line feed)");
        }
        std::array<double, 6> values{};
        std::size_t column = 0;
        std::string_view rest(line);
        while (true) {
            const std::size_t comma = rest.find(',');
            if (column >= values.size()) {
                throw FormatError("line " + std::to_string(number) + ": too many fields");
            }
            values[column++] = parse_field(rest.substr(0, comma), number);
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        if (column != values.size()) {
            throw FormatError("line " + std::to_string(number) + ": expected 6 fields, got " +
                              std::to_string(column));
        }
        traj.times.push_back(values[0]);
        traj.states.push_back({values[1], values[2]});
    }
    if (traj.empty()) {
        throw FormatError("trajectory file has no records");
    }
    return traj;
}

}  // namespace nairu
