#ifndef PAREVAL_INDICATORS_HPP
#define PAREVAL_INDICATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pareval/errors.hpp"
#include "pareval/hypervolume.hpp"
#include "pareval/pareto.hpp"

namespace pareval {

struct NicheConfig {
    double sigma = 0.1; // niche radius in canonical-space distance units

    NicheConfig() = default;
    explicit NicheConfig(double s) : sigma(s) {
        if (!(sigma > 0.0)) throw config_error("niche radius sigma must be > 0");
    }
};

struct IndicatorReport {
    std::string system_name;
    double hv = 0.0;
    int onvg = 0;
    std::optional<double> onvg_hat; // set by session normalization
    double onvgr = 0.0;
    double ud = 0.0;
    double os = 0.0;
    double as_ = 0.0;
    int n_points = 0;       // set size after deduplication
    int n_nondominated = 0; // == onvg
};

/// UD = 1 / (1 + D_nc) where nc(x) counts other front points strictly
/// within distance sigma, and D_nc is the sample standard deviation of
/// the niche counts (|X_n|-1 denominator). A single-point front has no
/// deviation to measure and scores 1.
inline double uniform_distribution(const std::vector<CanonicalPoint>& front,
                                   const NicheConfig& cfg) {
    if (front.empty()) throw evaluation_error("uniform_distribution of empty front");
    const std::size_t n = front.size();
    if (n <= 1) return 1.0;
    std::vector<double> nc(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && euclidean_distance(front[i], front[j]) < cfg.sigma)
                nc[i] += 1.0;
    double mean = 0.0;
    for (double c : nc) mean += c;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double c : nc) ss += (c - mean) * (c - mean);
    const double d_nc = std::sqrt(ss / static_cast<double>(n - 1));
    return 1.0 / (1.0 + d_nc);
}

namespace detail {
inline std::vector<double> axis_ranges(const std::vector<CanonicalPoint>& front) {
    if (front.empty()) throw evaluation_error("spread of empty front");
    const std::size_t dim = front[0].dim();
    std::vector<double> ranges(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        double lo = front[0].coords[i], hi = front[0].coords[i];
        for (const auto& p : front) {
            lo = std::min(lo, p.coords[i]);
            hi = std::max(hi, p.coords[i]);
        }
        ranges[i] = hi - lo; // ideal - nadir denominator is 1 per axis
    }
    return ranges;
}
} // namespace detail

/// Product over axes of the front's extent relative to the ideal-nadir range.
inline double overall_spread(const std::vector<CanonicalPoint>& front) {
    double v = 1.0;
    for (double r : detail::axis_ranges(front)) v *= r;
    return v;
}

/// Mean over axes of the front's extent relative to the ideal-nadir range.
inline double average_spread(const std::vector<CanonicalPoint>& front) {
    const auto ranges = detail::axis_ranges(front);
    double v = 0.0;
    for (double r : ranges) v += r;
    return v / static_cast<double>(ranges.size());
}

/// ONVG and ONVGR from a partition of the (deduplicated) set.
inline std::pair<int, double> capacity(const ParetoPartition& partition) {
    const auto nd = static_cast<int>(partition.non_dominated.size());
    const auto total = nd + static_cast<int>(partition.dominated.size());
    if (total == 0) throw evaluation_error("capacity of empty partition");
    return {nd, static_cast<double>(nd) / static_cast<double>(total)};
}

/// Session-level ONVG normalization: onvg_hat = onvg / max(onvg). A lone
/// system self-normalizes to 1.
inline void normalize_onvg(std::vector<IndicatorReport>& session) {
    if (session.empty()) throw evaluation_error("normalize_onvg on empty session");
    int max_onvg = 0;
    for (const auto& r : session) max_onvg = std::max(max_onvg, r.onvg);
    if (max_onvg == 0)
        throw evaluation_error("normalize_onvg: no system has a non-dominated point");
    for (auto& r : session)
        r.onvg_hat = static_cast<double>(r.onvg) / static_cast<double>(max_onvg);
}

/// Fixed pipeline for one system: dedupe -> partition -> indicators.
/// HV/UD/OS/AS are computed on the non-dominated front; ONVGR needs the
/// full deduplicated set by definition. onvg_hat stays unset until
/// normalize_onvg runs over the session.
inline IndicatorReport evaluate_system(const SolutionSet& s, double epsilon,
                                       const NicheConfig& niche) {
    const SolutionSet deduped = deduplicate(s, epsilon);
    const ParetoPartition part = pareto_partition(deduped);
    std::vector<CanonicalPoint> front;
    front.reserve(part.non_dominated.size());
    for (const auto& sp : part.non_dominated) front.push_back(sp.point);

    IndicatorReport r;
    r.system_name = s.system_name;
    std::tie(r.onvg, r.onvgr) = capacity(part);
    r.n_points = static_cast<int>(deduped.points.size());
    r.n_nondominated = r.onvg;
    r.hv = hypervolume(front);
    r.ud = uniform_distribution(front, niche);
    r.os = front.size() < 2 ? 0.0 : overall_spread(front);
    r.as_ = front.size() < 2 ? 0.0 : average_spread(front);
    return r;
}

/// Evaluates each system and applies the session-level normalization.
inline std::vector<IndicatorReport> evaluate_session(
    const std::vector<SolutionSet>& systems, double epsilon, const NicheConfig& niche) {
    std::vector<IndicatorReport> reports;
    reports.reserve(systems.size());
    for (const auto& s : systems) reports.push_back(evaluate_system(s, epsilon, niche));
    normalize_onvg(reports);
    return reports;
}

} // namespace pareval

#endif
