#pragma once

#include "planevar/bounds.hpp"
#include "planevar/search.hpp"

#include <algorithm>
#include <cmath>

namespace planevar {

enum class UpperRule {
    Exact1D,
    TriangleExact,
    PolygonUpper,
    LipschitzUpper,
    ExtensionUpper,
    JoinConvexUpper,
    TrivialUpper,
};

const char* to_string(UpperRule rule);

struct VariationEstimate {
    double lower = 0.0;
    PointList lower_witness;
    double upper = 0.0;
    UpperRule upper_rule = UpperRule::TrivialUpper;
    bool exact = false;
};

// Two-sided certificate for the variation of f on its domain: the lower bound
// comes from searched lists and the exact collapses (collinear domains,
// triangles, convex polygons), the upper bound is the least of every applicable
// ceiling. `exact` is set when the two sides meet within 1e-9 relative.
VariationEstimate certified_estimate(const FunctionTable& f, const SearchConfig& cfg = {});

// Variation of the identity coordinate function on sigma, intersected with its
// closed-form two-sided bounds (the diameter from below, the coordinate extents
// from above).
VariationEstimate variation_constant(const PointSet& sigma, const SearchConfig& cfg = {});

// Upper bound for the full norm: sup norm plus the Lipschitz constant times the
// coordinate-extent ceiling.
double lipschitz_bound(const FunctionTable& f);

// Bounds for f on s1 union s2 assembled from the restrictions to s1 and s2;
// requires the two sets to be joined convexly. Throws NotJoinedConvexly.
VariationEstimate join_bound(const FunctionTable& f, const PointSet& s1, const PointSet& s2,
                             const SearchConfig& cfg = {});

inline bool estimate_is_exact(double lower, double upper) {
    return std::abs(upper - lower) <= 1e-9 * std::max(1.0, upper);
}

}  // namespace planevar
