#ifndef PAREVAL_SYNTH_HPP
#define PAREVAL_SYNTH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "pareval/errors.hpp"
#include "pareval/pareto.hpp"
#include "pareval/rng.hpp"

namespace pareval {

enum class FrontShape { Concave, Convex, Linear };

/// Controls for a generated trade-off system. Identical specs produce
/// byte-identical point sets on every platform (seeded SplitMix64 only).
struct SynthSpec {
    int n_points = 10;       // points on the parametric front
    int n_objectives = 2;
    FrontShape front_shape = FrontShape::Linear;
    double spread = 1.0;     // fraction of the full front extent covered
    double jitter = 0.0;     // deviation from uniform spacing (2-D fronts)
    int n_dominated = 0;     // extra points shifted strictly toward the nadir
    std::uint64_t seed = 1;
};

namespace detail {

inline double shape_exponent(FrontShape s) {
    switch (s) {
        case FrontShape::Convex: return 2.0;   // bulges toward the ideal
        case FrontShape::Concave: return 0.5;  // bulges toward the nadir
        case FrontShape::Linear: return 1.0;   // the simplex
    }
    return 1.0;
}

/// Scales a positive-orthant direction onto the unit p-norm sphere. Any
/// two distinct points on that surface are mutually non-dominated.
inline std::vector<double> onto_front(std::vector<double> u, double p) {
    double norm;
    if (p == 1.0) {
        norm = 0.0;
        for (double v : u) norm += v;
    } else if (p == 2.0) {
        norm = 0.0;
        for (double v : u) norm += v * v;
        norm = std::sqrt(norm);
    } else {
        norm = 0.0;
        for (double v : u) norm += std::sqrt(v);
        norm *= norm;
    }
    for (double& v : u) v /= norm;
    return u;
}

} // namespace detail

inline SolutionSet generate(const SynthSpec& spec, const std::string& system_name = "synth") {
    if (spec.n_points < 1) throw config_error("SynthSpec.n_points must be >= 1");
    if (spec.n_objectives < 2) throw config_error("SynthSpec.n_objectives must be >= 2");
    if (spec.spread < 0.0 || spec.spread > 1.0)
        throw config_error("SynthSpec.spread must be in [0,1]");

    SplitMix64 rng(spec.seed);
    const double p = detail::shape_exponent(spec.front_shape);
    const auto n = static_cast<std::size_t>(spec.n_objectives);

    SolutionSet set;
    set.system_name = system_name;
    set.n_objectives = n;

    std::vector<CanonicalPoint> front;
    if (spec.n_objectives == 2) {
        // evenly spaced parameters over a spread-wide window centered at 0.5
        const double lo = 0.5 - spec.spread / 2.0;
        for (int i = 0; i < spec.n_points; ++i) {
            double t = spec.n_points == 1
                           ? 0.5
                           : lo + spec.spread * static_cast<double>(i) /
                                      static_cast<double>(spec.n_points - 1);
            if (spec.jitter > 0.0 && spec.n_points > 1) {
                const double spacing = spec.spread / static_cast<double>(spec.n_points - 1);
                t += spec.jitter * spacing * (rng.next_double() - 0.5);
            }
            t = std::clamp(t, 1e-9, 1.0 - 1e-9);
            CanonicalPoint cp;
            cp.coords = detail::onto_front({t, 1.0 - t}, p);
            front.push_back(std::move(cp));
        }
    } else {
        // random simplex directions mixed toward the barycenter by spread
        for (int i = 0; i < spec.n_points; ++i) {
            std::vector<double> u(n);
            double sum = 0.0;
            for (auto& v : u) {
                v = -std::log(1.0 - rng.next_double());
                sum += v;
            }
            for (auto& v : u)
                v = (1.0 - spec.spread) / static_cast<double>(n) + spec.spread * v / sum;
            CanonicalPoint cp;
            cp.coords = detail::onto_front(std::move(u), p);
            front.push_back(std::move(cp));
        }
    }

    for (std::size_t i = 0; i < front.size(); ++i)
        set.points.push_back({"s" + std::to_string(i), front[i]});

    // each dominated point is a front point shrunk strictly toward the nadir
    for (int i = 0; i < spec.n_dominated; ++i) {
        const auto parent = static_cast<std::size_t>(rng.next_u64() % front.size());
        const double scale = 0.5 + 0.4 * rng.next_double();
        CanonicalPoint cp = front[parent];
        for (double& v : cp.coords) v *= scale;
        set.points.push_back({"d" + std::to_string(i), std::move(cp)});
    }
    return set;
}

enum class UseCase { UC1, UC2, UC3 };

/// Two-system fixtures with pinned cardinalities: UC1 (1 of 2 vs 1 of 2),
/// UC2 (1 of 2 vs 8 of 9), UC3 (10 of 11 vs 6 of 7). Geometry is ours;
/// only the counts are contractual.
inline std::pair<SolutionSet, SolutionSet> uc_fixture(UseCase uc) {
    auto single = [](const std::string& name, double level) {
        SolutionSet s;
        s.system_name = name;
        s.n_objectives = 2;
        s.points.push_back({"s0", CanonicalPoint{{level, level}}});
        s.points.push_back({"d0", CanonicalPoint{{level / 2.0, level / 2.0}}});
        return s;
    };
    auto swept = [](const std::string& name, int n_front, double spread, std::uint64_t seed) {
        SynthSpec spec;
        spec.n_points = n_front;
        spec.front_shape = FrontShape::Linear;
        spec.spread = spread;
        spec.n_dominated = 1;
        spec.seed = seed;
        return generate(spec, name);
    };
    switch (uc) {
        case UseCase::UC1: // two black-box systems, one solution each
            return {single("System1", 0.7), single("System2", 0.3)};
        case UseCase::UC2: // black-box vs tunable white-box
            return {single("System1", 0.7), swept("System2", 8, 0.8, 22)};
        case UseCase::UC3: // both white-box
            return {swept("System1", 10, 0.9, 31), swept("System2", 6, 0.5, 32)};
    }
    throw config_error("unknown use case");
}

} // namespace pareval

#endif
