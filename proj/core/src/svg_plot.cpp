#include "nairu/svg_plot.hpp"

#include "nairu/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace nairu {

namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 150.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 55.0;

std::string fixed(double v, int decimals) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

// 1, 2 or 5 times a power of ten, giving roughly `target` intervals.
double nice_step(double span, int target) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double f = raw / mag;
    if (f < 1.5) {
        return mag;
    }
    if (f < 3.5) {
        return 2.0 * mag;
    }
    if (f < 7.5) {
        return 5.0 * mag;
    }
    return 10.0 * mag;
}

int decimals_for(double step) {
    return std::max(0, static_cast<int>(std::ceil(-std::log10(step) - 1e-9)));
}

struct Axis {
    double lo;
    double hi;
    double pixel_lo;
    double pixel_hi;

    [[nodiscard]] double map(double v) const {
        return pixel_lo + (v - lo) / (hi - lo) * (pixel_hi - pixel_lo);
    }
};

}  // namespace

std::string render_svg(const Trajectory& traj, const PlotOptions& options) {
    if (traj.empty() || traj.states.size() != traj.times.size()) {
        throw FormatError("cannot plot an empty trajectory");
    }
    const double w = options.width;
    const double h = options.height;

    double t_lo = traj.times.front();
    double t_hi = traj.times.back();
    if (t_hi <= t_lo) {
        t_hi = t_lo + 1.0;
    }

    double y_lo = 1e300;
    double y_hi = -1e300;
    for (const State& s : traj.states) {
        y_lo = std::min({y_lo, 100.0 * s.inflation, 100.0 * s.unemployment});
        y_hi = std::max({y_hi, 100.0 * s.inflation, 100.0 * s.unemployment});
    }
    if (y_hi - y_lo < 1e-9) {
        y_lo -= 0.5;
        y_hi += 0.5;
    }
    const double y_step = nice_step(y_hi - y_lo, 6);
    y_lo = std::floor(y_lo / y_step) * y_step;
    y_hi = std::ceil(y_hi / y_step) * y_step;
    const double t_step = nice_step(t_hi - t_lo, 8);

    const Axis x_axis{t_lo, t_hi, kMarginLeft, w - kMarginRight};
    const Axis y_axis{y_lo, y_hi, h - kMarginBottom, kMarginTop};

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
        << options.height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << fixed(w / 2.0, 1) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << options.title << "</text>\n";

    // Grid and ticks.
    svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
    const int t_dec = decimals_for(t_step);
    for (auto k = static_cast<long>(std::ceil(t_lo / t_step - 1e-9));
         static_cast<double>(k) * t_step <= t_hi + 1e-9 * t_step; ++k) {
        const double t = static_cast<double>(k) * t_step;
        const std::string x = fixed(x_axis.map(t), 2);
        svg << "<line x1=\"" << x << "\" y1=\"" << fixed(y_axis.pixel_lo, 2) << "\" x2=\"" << x
            << "\" y2=\"" << fixed(y_axis.pixel_hi, 2) << "\" stroke=\"#dddddd\"/>\n"
            << "<text x=\"" << x << "\" y=\"" << fixed(y_axis.pixel_lo + 16.0, 2)
            << "\" text-anchor=\"middle\">" << fixed(t, t_dec) << "</text>\n";
    }
    const int y_dec = decimals_for(y_step);
    for (auto k = std::lround(y_lo / y_step); static_cast<double>(k) * y_step <= y_hi + 1e-9 * y_step;
         ++k) {
        const double v = static_cast<double>(k) * y_step;
        const std::string y = fixed(y_axis.map(v), 2);
        svg << "<line x1=\"" << fixed(x_axis.pixel_lo, 2) << "\" y1=\"" << y << "\" x2=\""
            << fixed(x_axis.pixel_hi, 2) << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n"
            << "<text x=\"" << fixed(x_axis.pixel_lo - 6.0, 2) << "\" y=\"" << y
            << "\" text-anchor=\"end\" dominant-baseline=\"middle\">" << fixed(v, y_dec)
            << "%</text>\n";
    }
    svg << "<text x=\"" << fixed((x_axis.pixel_lo + x_axis.pixel_hi) / 2.0, 2) << "\" y=\""
        << fixed(h - 12.0, 2) << "\" text-anchor=\"middle\">time [years]</text>\n"
        << "<text x=\"16\" y=\"" << fixed((y_axis.pixel_lo + y_axis.pixel_hi) / 2.0, 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << fixed((y_axis.pixel_lo + y_axis.pixel_hi) / 2.0, 2) << ")\">percent</text>\n"
        << "</g>\n";

    svg << "<rect x=\"" << fixed(x_axis.pixel_lo, 2) << "\" y=\"" << fixed(y_axis.pixel_hi, 2)
        << "\" width=\"" << fixed(x_axis.pixel_hi - x_axis.pixel_lo, 2) << "\" height=\""
        << fixed(y_axis.pixel_lo - y_axis.pixel_hi, 2)
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    struct Series {
        const char* label;
        const char* color;
        double State::*field;
    };
    const Series series[] = {{"inflation I(t)", "#c0392b", &State::inflation},
                             {"unemployment u(t)", "#2c3e80", &State::unemployment}};
    double legend_y = kMarginTop + 10.0;
    for (const Series& s : series) {
        svg << "<polyline fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < traj.size(); ++i) {
            if (i > 0) {
                svg << ' ';
            }
            svg << fixed(x_axis.map(traj.times[i]), 2) << ','
                << fixed(y_axis.map(100.0 * (traj.states[i].*s.field)), 2);
        }
        svg << "\"/>\n";
        const double lx = w - kMarginRight + 12.0;
        svg << "<line x1=\"" << fixed(lx, 2) << "\" y1=\"" << fixed(legend_y, 2) << "\" x2=\""
            << fixed(lx + 24.0, 2) << "\" y2=\"" << fixed(legend_y, 2) << "\" stroke=\""
            << s.color << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << fixed(lx + 30.0, 2) << "\" y=\"" << fixed(legend_y, 2)
            << "\" font-family=\"sans-serif\" font-size=\"12\" dominant-baseline=\"middle\">"
            << s.label << "</text>\n";
        legend_y += 20.0;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace nairu
