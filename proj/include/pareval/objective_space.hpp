#ifndef PAREVAL_OBJECTIVE_SPACE_HPP
#define PAREVAL_OBJECTIVE_SPACE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "pareval/errors.hpp"

namespace pareval {

enum class Direction { Maximize, Minimize };

/// One metric axis: its name, preferred direction, and raw-unit bounds.
struct ObjectiveSpec {
    std::string name;
    Direction direction = Direction::Maximize;
    double lower_bound = 0.0;
    double upper_bound = 1.0;
};

/// Ordered list of objective axes. Order is significant: it fixes the
/// radar axis order and the hypervolume dimension order downstream.
class ObjectiveSchema {
public:
    explicit ObjectiveSchema(std::vector<ObjectiveSpec> objectives)
        : objectives_(std::move(objectives)) {
        if (objectives_.size() < 2)
            throw schema_error("objective schema needs at least 2 axes, got " +
                               std::to_string(objectives_.size()));
        std::set<std::string> names;
        for (const auto& o : objectives_) {
            if (!std::isfinite(o.lower_bound) || !std::isfinite(o.upper_bound))
                throw config_error("objective '" + o.name + "' has non-finite bounds");
            if (!(o.lower_bound < o.upper_bound))
                throw config_error("objective '" + o.name + "' has degenerate bounds [" +
                                   std::to_string(o.lower_bound) + ", " +
                                   std::to_string(o.upper_bound) + "]");
            if (!names.insert(o.name).second)
                throw schema_error("duplicate objective name '" + o.name + "'");
        }
    }

    std::size_t size() const { return objectives_.size(); }
    const ObjectiveSpec& at(std::size_t i) const { return objectives_.at(i); }
    const std::vector<ObjectiveSpec>& objectives() const { return objectives_; }

private:
    std::vector<ObjectiveSpec> objectives_;
};

/// Point in the canonical unit hypercube: every coordinate in [0,1],
/// larger is better on every axis.
struct CanonicalPoint {
    std::vector<double> coords;
    bool clamped = false; // a raw value fell outside its axis bounds

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }

    friend bool operator==(const CanonicalPoint& a, const CanonicalPoint& b) {
        return a.coords == b.coords;
    }
};

struct ReferencePoints {
    CanonicalPoint nadir; // all zeros
    CanonicalPoint ideal; // all ones
};

/// Maps a raw metric tuple into the canonical cube. Minimize axes are
/// flipped so that 1 is always best. Out-of-bounds raw values clamp and
/// set the point's clamped flag.
inline CanonicalPoint canonicalize(const std::vector<double>& raw,
                                   const ObjectiveSchema& schema) {
    if (raw.size() != schema.size())
        throw schema_error("raw tuple has " + std::to_string(raw.size()) +
                           " values, schema has " + std::to_string(schema.size()));
    CanonicalPoint p;
    p.coords.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto& o = schema.at(i);
        double c = (raw[i] - o.lower_bound) / (o.upper_bound - o.lower_bound);
        if (o.direction == Direction::Minimize) c = 1.0 - c;
        if (c < 0.0 || c > 1.0) {
            p.clamped = true;
            c = std::clamp(c, 0.0, 1.0);
        }
        p.coords.push_back(c);
    }
    return p;
}

/// Inverse affine map back to raw metric units (exact for in-bounds values).
inline std::vector<double> decanonicalize(const CanonicalPoint& p,
                                          const ObjectiveSchema& schema) {
    if (p.dim() != schema.size())
        throw schema_error("point dimension does not match schema");
    std::vector<double> raw(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const auto& o = schema.at(i);
        double c = p.coords[i];
        if (o.direction == Direction::Minimize) c = 1.0 - c;
        raw[i] = o.lower_bound + c * (o.upper_bound - o.lower_bound);
    }
    return raw;
}

/// Nadir at the origin, ideal at all-ones. These are the fixed reference
/// points for hypervolume and the spread indicators.
inline ReferencePoints reference_points(const ObjectiveSchema& schema) {
    ReferencePoints r;
    r.nadir.coords.assign(schema.size(), 0.0);
    r.ideal.coords.assign(schema.size(), 1.0);
    return r;
}

} // namespace pareval

#endif
