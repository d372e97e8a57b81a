#ifndef PAREVAL_PARETO_HPP
#define PAREVAL_PARETO_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "pareval/errors.hpp"
#include "pareval/objective_space.hpp"

namespace pareval {

struct SolutionPoint {
    std::string id; // model identifier or model@threshold tag
    CanonicalPoint point;
};

struct SolutionSet {
    std::string system_name;
    std::size_t n_objectives = 0;
    std::vector<SolutionPoint> points;
};

struct ParetoPartition {
    std::vector<SolutionPoint> non_dominated;
    std::vector<SolutionPoint> dominated;
};

/// Strict Pareto dominance in canonical (maximize-everything) orientation:
/// a >= b componentwise and a != b.
inline bool dominates(const CanonicalPoint& a, const CanonicalPoint& b) {
    if (a.dim() != b.dim())
        throw schema_error("dominance check on points of different dimension");
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.coords[i] < b.coords[i]) return false;
        if (a.coords[i] > b.coords[i]) strictly_better = true;
    }
    return strictly_better;
}

/// Splits a set into its first non-dominated front and the rest.
/// Stable: relative input order is preserved within each part.
/// Plain O(M^2) pairwise scan; M is tens-to-hundreds here.
inline ParetoPartition pareto_partition(const SolutionSet& s) {
    if (s.points.empty())
        throw evaluation_error("pareto_partition on empty solution set '" +
                               s.system_name + "'");
    ParetoPartition part;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < s.points.size(); ++j) {
            if (j != i && dominates(s.points[j].point, s.points[i].point)) {
                dominated = true;
                break;
            }
        }
        (dominated ? part.dominated : part.non_dominated).push_back(s.points[i]);
    }
    return part;
}

inline double euclidean_distance(const CanonicalPoint& a, const CanonicalPoint& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a.coords[i] - b.coords[i];
        s += d * d;
    }
    return std::sqrt(s);
}

/// Removes near-duplicate points: DBSCAN-style density clustering with
/// minPts = 1 and Euclidean radius epsilon, i.e. connected components of
/// the <=epsilon neighborhood graph. One representative survives per
/// cluster: the member that dominates the most other members, ties broken
/// by lowest input index. Retained pairs are therefore all at distance
/// > epsilon.
inline SolutionSet deduplicate(const SolutionSet& s, double epsilon) {
    if (!(epsilon > 0.0))
        throw config_error("deduplication epsilon must be > 0");
    const std::size_t m = s.points.size();
    std::vector<int> cluster(m, -1);
    int n_clusters = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (cluster[i] >= 0) continue;
        // flood fill the epsilon-connected component containing i
        cluster[i] = n_clusters;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < m; ++j) {
                if (cluster[j] < 0 &&
                    euclidean_distance(s.points[cur].point, s.points[j].point) <= epsilon) {
                    cluster[j] = n_clusters;
                    stack.push_back(j);
                }
            }
        }
        ++n_clusters;
    }

    std::vector<std::size_t> representative(static_cast<std::size_t>(n_clusters));
    std::vector<int> best_score(static_cast<std::size_t>(n_clusters), -1);
    for (std::size_t i = 0; i < m; ++i) {
        int score = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (cluster[j] == cluster[i] && j != i &&
                dominates(s.points[i].point, s.points[j].point))
                ++score;
        auto c = static_cast<std::size_t>(cluster[i]);
        if (score > best_score[c]) { // first member wins ties (lowest index)
            best_score[c] = score;
            representative[c] = i;
        }
    }

    SolutionSet out;
    out.system_name = s.system_name;
    out.n_objectives = s.n_objectives;
    std::vector<char> keep(m, 0);
    for (std::size_t r : representative) keep[r] = 1;
    for (std::size_t i = 0; i < m; ++i)
        if (keep[i]) out.points.push_back(s.points[i]);
    return out;
}

} // namespace pareval

#endif
