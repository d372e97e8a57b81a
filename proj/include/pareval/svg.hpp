#ifndef PAREVAL_SVG_HPP
#define PAREVAL_SVG_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pareval/errors.hpp"
#include "pareval/radar.hpp"
#include "pareval/report.hpp"

namespace pareval {
namespace detail {

// fixed palette keyed by system index; deterministic output depends on it
inline const char* palette_color(std::size_t i) {
    static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                   "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
    return colors[i % 8];
}

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return std::string(buf);
}

} // namespace detail

/// Standalone SVG radar chart: concentric grid rings, labeled axes, one
/// translucent polygon per system, legend with normalized areas.
/// Byte output is deterministic for fixed input.
inline std::string radar_svg(
    const std::vector<std::pair<std::string, RadarGeometry>>& session,
    const ReportMeta& meta) {
    if (session.empty()) throw geometry_error("radar_svg: empty session");
    if (session.size() > 8) throw geometry_error("radar_svg: at most 8 systems per chart");
    const auto& axes = session.front().second.axis_names;
    for (const auto& [name, geom] : session)
        if (geom.axis_names != axes)
            throw geometry_error("radar_svg: mismatched axis sets between systems");

    const double cx = 260.0, cy = 240.0, radius = 170.0;
    auto to_xy = [&](double r, double theta) {
        // screen y grows downward; negate to keep the chart counterclockwise
        return std::pair<double, double>{cx + radius * r * std::cos(theta),
                                         cy - radius * r * std::sin(theta)};
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"560\" height=\"500\" "
          "viewBox=\"0 0 560 500\">\n";
    os << "<!--\n" << meta.comment_block(" ") << "-->\n";
    os << "<rect width=\"560\" height=\"500\" fill=\"white\"/>\n";

    const std::size_t n = axes.size();
    // grid rings at 0.25 steps
    for (int ring = 1; ring <= 4; ++ring) {
        const double rr = static_cast<double>(ring) / 4.0;
        os << "<polygon fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < n; ++i) {
            const auto [x, y] = to_xy(rr, 2.0 * std::numbers::pi * static_cast<double>(i) /
                                              static_cast<double>(n));
            os << detail::svg_num(x) << ',' << detail::svg_num(y) << (i + 1 < n ? " " : "");
        }
        os << "\"/>\n";
    }
    // axis spokes and labels
    for (std::size_t i = 0; i < n; ++i) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        const auto [x, y] = to_xy(1.0, theta);
        os << "<line x1=\"" << detail::svg_num(cx) << "\" y1=\"" << detail::svg_num(cy)
           << "\" x2=\"" << detail::svg_num(x) << "\" y2=\"" << detail::svg_num(y)
           << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
        const auto [lx, ly] = to_xy(1.12, theta);
        os << "<text x=\"" << detail::svg_num(lx) << "\" y=\"" << detail::svg_num(ly)
           << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
           << axes[i] << "</text>\n";
    }
    // system polygons
    for (std::size_t s = 0; s < session.size(); ++s) {
        const auto& geom = session[s].second;
        os << "<polygon fill=\"" << detail::palette_color(s) << "\" fill-opacity=\"0.25\" stroke=\""
           << detail::palette_color(s) << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < n; ++i) {
            const auto [x, y] = to_xy(geom.radii[i], geom.angles[i]);
            os << detail::svg_num(x) << ',' << detail::svg_num(y) << (i + 1 < n ? " " : "");
        }
        os << "\"/>\n";
    }
    // legend with normalized areas
    for (std::size_t s = 0; s < session.size(); ++s) {
        const double ly = 445.0 + 18.0 * static_cast<double>(s % 3);
        const double lx = 20.0 + 180.0 * static_cast<double>(s / 3);
        const AreaScore area = surveyor_area(session[s].second);
        os << "<rect x=\"" << detail::svg_num(lx) << "\" y=\"" << detail::svg_num(ly - 10.0)
           << "\" width=\"12\" height=\"12\" fill=\"" << detail::palette_color(s) << "\"/>\n";
        os << "<text x=\"" << detail::svg_num(lx + 18.0) << "\" y=\"" << detail::svg_num(ly)
           << "\" font-family=\"sans-serif\" font-size=\"13\">" << session[s].first
           << " (area " << format_fixed2(area.normalized_area) << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

inline void emit_radar_svg(const std::vector<std::pair<std::string, RadarGeometry>>& session,
                           const std::string& path, const ReportMeta& meta) {
    const std::string body = radar_svg(session, meta); // validate before touching the target
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ingestion_error(path + ": cannot open for writing");
    out << body;
}

/// 2-D scatter of each system's points: filled markers for the
/// non-dominated front, hollow ones for dominated points.
inline std::string pareto_scatter_svg(const std::vector<SolutionSet>& systems,
                                      const ReportMeta& meta) {
    for (const auto& s : systems)
        if (s.n_objectives != 2)
            throw geometry_error("pareto_scatter_svg: only 2-objective fronts are drawn");
    const double x0 = 60.0, y0 = 20.0, w = 400.0, h = 400.0;
    auto to_xy = [&](const CanonicalPoint& p) {
        return std::pair<double, double>{x0 + w * p.coords[0], y0 + h * (1.0 - p.coords[1])};
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"500\" "
          "viewBox=\"0 0 520 500\">\n";
    os << "<!--\n" << meta.comment_block(" ") << "-->\n";
    os << "<rect width=\"520\" height=\"500\" fill=\"white\"/>\n";
    os << "<rect x=\"60\" y=\"20\" width=\"400\" height=\"400\" fill=\"none\" stroke=\"#333333\"/>\n";
    for (std::size_t s = 0; s < systems.size(); ++s) {
        const ParetoPartition part = pareto_partition(systems[s]);
        for (const auto& sp : part.non_dominated) {
            const auto [x, y] = to_xy(sp.point);
            os << "<circle cx=\"" << detail::svg_num(x) << "\" cy=\"" << detail::svg_num(y)
               << "\" r=\"5\" fill=\"" << detail::palette_color(s) << "\"/>\n";
        }
        for (const auto& sp : part.dominated) {
            const auto [x, y] = to_xy(sp.point);
            os << "<circle cx=\"" << detail::svg_num(x) << "\" cy=\"" << detail::svg_num(y)
               << "\" r=\"5\" fill=\"none\" stroke=\"" << detail::palette_color(s)
               << "\" stroke-width=\"1.5\"/>\n";
        }
        const double ly = 465.0 + 16.0 * static_cast<double>(s % 2);
        const double lx = 60.0 + 200.0 * static_cast<double>(s / 2);
        os << "<rect x=\"" << detail::svg_num(lx) << "\" y=\"" << detail::svg_num(ly - 9.0)
           << "\" width=\"10\" height=\"10\" fill=\"" << detail::palette_color(s) << "\"/>\n";
        os << "<text x=\"" << detail::svg_num(lx + 16.0) << "\" y=\"" << detail::svg_num(ly)
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << systems[s].system_name
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace pareval

#endif
