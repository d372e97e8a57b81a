#ifndef PAREVAL_RADAR_HPP
#define PAREVAL_RADAR_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "pareval/errors.hpp"
#include "pareval/indicators.hpp"

namespace pareval {

// Radar axis order is HV, ONVG_hat, ONVGR, UD, AS — the tables' column
// order. The polygon area depends on axis adjacency, so this order is part
// of the external contract.
inline const std::array<const char*, 5>& radar_axis_names() {
    static const std::array<const char*, 5> names{"HV", "ONVG_hat", "ONVGR", "UD", "AS"};
    return names;
}

struct RadarGeometry {
    std::vector<std::string> axis_names;
    std::vector<double> radii;  // polar radius per axis, in [0,1]
    std::vector<double> angles; // 2*pi*i/n, counterclockwise
};

struct AreaScore {
    double raw_area = 0.0;        // polygon area
    double normalized_area = 0.0; // raw / regular-polygon maximum
};

/// Maximum polygon area for n unit radii on equally spaced axes.
inline double area_max(std::size_t n) {
    return static_cast<double>(n) / 2.0 * std::sin(2.0 * std::numbers::pi / static_cast<double>(n));
}

inline RadarGeometry radar_geometry(const IndicatorReport& report) {
    if (!report.onvg_hat)
        throw evaluation_error("radar_geometry: onvg_hat unset; run session normalization first");
    RadarGeometry g;
    const auto& names = radar_axis_names();
    g.axis_names.assign(names.begin(), names.end());
    g.radii = {report.hv, *report.onvg_hat, report.onvgr, report.ud, report.as_};
    for (std::size_t i = 0; i < g.radii.size(); ++i)
        g.angles.push_back(2.0 * std::numbers::pi * static_cast<double>(i) /
                           static_cast<double>(g.radii.size()));
    return g;
}

/// Surveyor's (shoelace) formula over the polar vertices, closed by
/// wrapping the last vertex to the first.
inline AreaScore surveyor_area(const RadarGeometry& geom) {
    const std::size_t n = geom.radii.size();
    if (n < 3) throw geometry_error("surveyor_area needs at least 3 axes, got " +
                                    std::to_string(n));
    double twice_area = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double xi = geom.radii[i] * std::cos(geom.angles[i]);
        const double yi = geom.radii[i] * std::sin(geom.angles[i]);
        const double xj = geom.radii[j] * std::cos(geom.angles[j]);
        const double yj = geom.radii[j] * std::sin(geom.angles[j]);
        twice_area += xi * yj - xj * yi;
    }
    AreaScore s;
    s.raw_area = std::abs(twice_area) / 2.0;
    s.normalized_area = s.raw_area / area_max(n);
    return s;
}

} // namespace pareval

#endif
