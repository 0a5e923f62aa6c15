#pragma once

#include "planevar/function_table.hpp"

namespace planevar {

// Variation of a function on a collinear domain: the sorted one-dimensional sum
// of absolute increments, which the two-dimensional quantity collapses to.
// Throws NotCollinear.
double exact_collinear(const FunctionTable& f);

// Variation on a non-degenerate triangle: half the sum of the three pairwise
// value differences. Throws CollinearPoints (and ValidationError unless |domain| == 3).
double triangle_exact(const FunctionTable& f);

// Convex hull in counterclockwise order starting from the lexicographically
// least point; interior and edge points are dropped.
std::vector<Point> convex_hull_ccw(std::vector<Point> pts);

bool strictly_convex_position(const PointSet& s);

struct PolygonBounds {
    double lower;
    double upper;
    std::vector<Point> hull;  // counterclockwise
};

// Two-sided bounds for a domain in strictly convex position: half the closed
// cyclic sum from below, the cyclic sum minus its largest edge from above.
// Throws NotConvexPosition.
PolygonBounds polygon_bounds(const FunctionTable& f);

// Largest |f(p) - f(q)| / |p - q| over distinct pairs; 0 for a singleton domain.
double lipschitz_constant(const FunctionTable& f);

// Variation bound for a function of one coordinate: u lives on the projection of
// sigma to the horizontal axis, and the bound is u's one-dimensional variation.
// Throws ProjectionMismatch when u's domain is not exactly that projection.
double extension_bound(const FunctionTable& u, const PointSet& sigma);

// True when every pair (x, y) with x exclusive to s1 and y exclusive to s2 has a
// common point of s1 and s2 on the closed segment [x, y].
bool join_convexly(const PointSet& s1, const PointSet& s2);

}  // namespace planevar
