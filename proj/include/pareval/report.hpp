#ifndef PAREVAL_REPORT_HPP
#define PAREVAL_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "pareval/csv.hpp"
#include "pareval/indicators.hpp"
#include "pareval/radar.hpp"

namespace pareval {

/// Audit header embedded in every output file: the conventions that shaped
/// the numbers, so results can be traced back to a configuration.
struct ReportMeta {
    std::string config_hash = "none";
    double epsilon = 1e-6;
    double sigma = 0.1;

    std::string comment_block(const std::string& prefix) const {
        std::ostringstream os;
        os << prefix << " config_hash=" << config_hash << " epsilon=" << format_double(epsilon)
           << " sigma=" << format_double(sigma) << "\n"
           << prefix << " conventions: dedup=dbscan-minpts1-euclidean"
           << " threshold=score>=tau area_norm=theoretical-bounds\n";
        return os.str();
    }
};

struct SystemResult {
    IndicatorReport report;
    AreaScore area;
};

inline std::vector<SystemResult> score_session(std::vector<IndicatorReport> reports) {
    std::vector<SystemResult> out;
    out.reserve(reports.size());
    for (auto& r : reports) {
        AreaScore a = surveyor_area(radar_geometry(r));
        out.push_back({std::move(r), a});
    }
    return out;
}

/// Machine-readable report: full-precision values, LF line endings.
inline std::string report_csv(const std::vector<SystemResult>& session, const ReportMeta& meta) {
    std::ostringstream os;
    os << meta.comment_block("#");
    os << "system,HV,ONVG,ONVG_hat,ONVGR,UD,OS,AS,area,area_norm,n_points,n_front\n";
    for (const auto& s : session) {
        const auto& r = s.report;
        os << r.system_name << ',' << format_double(r.hv) << ',' << r.onvg << ','
           << format_double(r.onvg_hat.value()) << ',' << format_double(r.onvgr) << ','
           << format_double(r.ud) << ',' << format_double(r.os) << ',' << format_double(r.as_)
           << ',' << format_double(s.area.raw_area) << ','
           << format_double(s.area.normalized_area) << ',' << r.n_points << ','
           << r.n_nondominated << '\n';
    }
    return os.str();
}

/// Human-readable table, two decimals, same column order as the radar axes.
inline std::string report_text(const std::vector<SystemResult>& session, const ReportMeta& meta) {
    std::size_t name_w = 6; // "System"
    for (const auto& s : session) name_w = std::max(name_w, s.report.system_name.size());

    std::ostringstream os;
    os << meta.comment_block("#");
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
    };
    os << pad("System", name_w) << "  HV    ONVG^ ONVGR UD    OS    AS    Area\n";
    for (const auto& s : session) {
        const auto& r = s.report;
        os << pad(r.system_name, name_w) << "  " << format_fixed2(r.hv) << "  "
           << format_fixed2(r.onvg_hat.value()) << "  " << format_fixed2(r.onvgr) << "  "
           << format_fixed2(r.ud) << "  " << format_fixed2(r.os) << "  " << format_fixed2(r.as_)
           << "  " << format_fixed2(s.area.normalized_area) << '\n';
    }
    return os.str();
}

} // namespace pareval

#endif
