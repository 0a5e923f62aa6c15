#include "planevar/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace planevar {

namespace {

// Sums after sorting, so the result does not depend on the order the terms
// were produced in. Bounds computed from the same term multiset then agree
// bit-for-bit across reorderings (reversed traversals, relabeled hulls,
// affine images).
double sorted_sum(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum;
}

}  // namespace

double exact_collinear(const FunctionTable& f) {
    const auto& pts = f.domain().points();
    if (!all_collinear(pts)) throw NotCollinear("domain is not collinear");
    // Sorted domain order is position order along the common line.
    std::vector<double> steps;
    steps.reserve(pts.size());
    for (std::size_t i = 1; i < pts.size(); ++i) {
        steps.push_back(std::abs(f.value_by_index(i) - f.value_by_index(i - 1)));
    }
    return sorted_sum(std::move(steps));
}

double triangle_exact(const FunctionTable& f) {
    if (f.size() != 3) throw ValidationError("triangle bound needs exactly three points");
    const auto& pts = f.domain().points();
    if (orientation(pts[0], pts[1], pts[2]) == 0) {
        throw CollinearPoints("triangle bound needs points in general position");
    }
    double d01 = std::abs(f.value_by_index(0) - f.value_by_index(1));
    double d02 = std::abs(f.value_by_index(0) - f.value_by_index(2));
    double d12 = std::abs(f.value_by_index(1) - f.value_by_index(2));
    return 0.5 * sorted_sum({d01, d02, d12});
}

std::vector<Point> convex_hull_ccw(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;

    std::vector<Point> hull;
    // Lower chain, then upper chain; strict turns only, so edge-interior points drop.
    for (const Point& p : pts) {
        while (hull.size() >= 2 &&
               orientation(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0) {
            hull.pop_back();
        }
        hull.push_back(p);
    }
    std::size_t lower_size = hull.size();
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (hull.size() > lower_size &&
               orientation(hull[hull.size() - 2], hull[hull.size() - 1], *it) <= 0) {
            hull.pop_back();
        }
        hull.push_back(*it);
    }
    hull.pop_back();  // closes back at the lex-least point
    return hull;
}

bool strictly_convex_position(const PointSet& s) {
    if (s.size() < 3) return false;
    return convex_hull_ccw(s.points()).size() == s.size();
}

PolygonBounds polygon_bounds(const FunctionTable& f) {
    const auto& dom = f.domain();
    if (dom.size() < 3 || !strictly_convex_position(dom)) {
        throw NotConvexPosition("domain is not in strictly convex position");
    }
    std::vector<Point> hull = convex_hull_ccw(dom.points());

    std::size_t m = hull.size();
    std::vector<double> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        edges.push_back(std::abs(f.value_at(hull[(i + 1) % m]) - f.value_at(hull[i])));
    }
    double max_edge = *std::max_element(edges.begin(), edges.end());
    double cyclic = sorted_sum(std::move(edges));
    return PolygonBounds{0.5 * cyclic, cyclic - max_edge, std::move(hull)};
}

double lipschitz_constant(const FunctionTable& f) {
    const auto& pts = f.domain().points();
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double num = std::abs(f.value_by_index(i) - f.value_by_index(j));
            best = std::max(best, num / distance(pts[i], pts[j]));
        }
    }
    return best;
}

double extension_bound(const FunctionTable& u, const PointSet& sigma) {
    std::vector<Point> proj;
    proj.reserve(sigma.size());
    for (const Point& p : sigma.points()) proj.push_back(Point{p.x, Rat(0)});
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    if (!(PointSet(proj) == u.domain())) {
        throw ProjectionMismatch("domain of u must be the horizontal projection of sigma");
    }
    return exact_collinear(u);
}

namespace {

bool on_closed_segment(const Point& w, const Point& x, const Point& y) {
    if (orientation(x, y, w) != 0) return false;
    Rat dot = (w.x - x.x) * (w.x - y.x) + (w.y - x.y) * (w.y - y.y);
    return dot <= 0;
}

}  // namespace

bool join_convexly(const PointSet& s1, const PointSet& s2) {
    std::vector<Point> only1, only2, shared;
    for (const Point& p : s1.points()) {
        (s2.contains(p) ? shared : only1).push_back(p);
    }
    for (const Point& p : s2.points()) {
        if (!s1.contains(p)) only2.push_back(p);
    }
    for (const Point& x : only1) {
        for (const Point& y : only2) {
            bool linked = std::any_of(shared.begin(), shared.end(), [&](const Point& w) {
                return on_closed_segment(w, x, y);
            });
            if (!linked) return false;
        }
    }
    return true;
}

}  // namespace planevar
