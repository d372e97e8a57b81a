#ifndef PAREVAL_HYPERVOLUME_HPP
#define PAREVAL_HYPERVOLUME_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "pareval/errors.hpp"
#include "pareval/objective_space.hpp"

namespace pareval {
namespace detail {

using PointList = std::vector<std::vector<double>>;

inline bool dominates_coords(const std::vector<double>& a, const std::vector<double>& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return false;
        if (a[i] > b[i]) strict = true;
    }
    return strict;
}

inline PointList nondominated_coords(const PointList& pts) {
    PointList out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dom = false;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i && (dominates_coords(pts[j], pts[i]) ||
                           (pts[j] == pts[i] && j < i))) {
                dom = true;
                break;
            }
        if (!dom) out.push_back(pts[i]);
    }
    return out;
}

/// 2-D: sort by first axis descending and accumulate the rectangle strips.
inline double hv_2d(PointList pts) {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return a[0] > b[0] || (a[0] == b[0] && a[1] > b[1]);
    });
    double area = 0.0, prev_y = 0.0;
    for (const auto& p : pts) {
        if (p[1] > prev_y) {
            area += p[0] * (p[1] - prev_y);
            prev_y = p[1];
        }
    }
    return area;
}

inline double inclusive_hv(const std::vector<double>& p) {
    double v = 1.0;
    for (double c : p) v *= c;
    return v;
}

double wfg_hv(PointList pts); // forward

/// Exclusive contribution of p given the remaining set: inclusive box of p
/// minus the volume of the remaining set clipped into that box.
inline double exclusive_hv(const std::vector<double>& p, const PointList& rest) {
    PointList limited;
    limited.reserve(rest.size());
    for (const auto& q : rest) {
        std::vector<double> lq(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) lq[i] = std::min(q[i], p[i]);
        limited.push_back(std::move(lq));
    }
    return inclusive_hv(p) - wfg_hv(nondominated_coords(limited));
}

/// WFG-style recursive decomposition, exact for any N. Reference point is
/// the canonical nadir (origin), all coordinates in [0,1].
inline double wfg_hv(PointList pts) {
    if (pts.empty()) return 0.0;
    if (pts[0].size() == 2) return hv_2d(std::move(pts));
    // sorting by last coordinate keeps the recursion shallow
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a.back() > b.back(); });
    double total = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        total += exclusive_hv(pts[i], PointList(pts.begin() + i + 1, pts.end()));
    return total;
}

} // namespace detail

/// Lebesgue measure of the union of boxes [nadir, x] over the front,
/// in canonical space; dominated points contribute nothing.
inline double hypervolume(const std::vector<CanonicalPoint>& front) {
    if (front.empty()) throw evaluation_error("hypervolume of empty front");
    detail::PointList pts;
    pts.reserve(front.size());
    for (const auto& p : front) pts.push_back(p.coords);
    pts = detail::nondominated_coords(pts);
    if (pts[0].size() == 1) {
        double best = 0.0;
        for (const auto& p : pts) best = std::max(best, p[0]);
        return best;
    }
    return detail::wfg_hv(std::move(pts));
}

} // namespace pareval

#endif
