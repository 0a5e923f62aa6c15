#pragma once

#include "planevar/errors.hpp"
#include "planevar/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace planevar {

struct Point {
    Rat x;
    Rat y;

    bool operator==(const Point&) const = default;
};

// Lexicographic on (x, y); the total order behind all deterministic iteration.
bool operator<(const Point& a, const Point& b);
inline bool operator>(const Point& a, const Point& b) { return b < a; }
inline bool operator<=(const Point& a, const Point& b) { return !(b < a); }

// An ordered list of points, repeats allowed.
using PointList = std::vector<Point>;

// Oriented line a*x + b*y + c = 0 with (a, b) != (0, 0). Coefficients are stored
// canonically, divided by |leading nonzero of (a, b)|, so two coefficient triples
// compare equal exactly when they differ by a positive factor. Negating all three
// coefficients yields the same point set with sides swapped.
class Line {
public:
    Line(Rat a, Rat b, Rat c);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Rat& c() const { return c_; }

    bool operator==(const Line&) const = default;

private:
    Rat a_, b_, c_;
};

bool operator<(const Line& lhs, const Line& rhs);

// Exact sign of a*x + b*y + c at p: +1, 0, or -1.
int side(const Line& l, const Point& p);

// Signed evaluation itself, before taking the sign.
Rat line_value(const Line& l, const Point& p);

// Orthogonal projection of p onto l.
Point project_to_line(const Line& l, const Point& p);
PointList project_to_line(const Line& l, const PointList& S);

// Invertible affine map p -> M p + t.
class AffineMap {
public:
    AffineMap(Rat m00, Rat m01, Rat m10, Rat m11, Rat tx, Rat ty);

    Point apply(const Point& p) const;
    const Rat& det() const { return det_; }

    const Rat& m00() const { return m00_; }
    const Rat& m01() const { return m01_; }
    const Rat& m10() const { return m10_; }
    const Rat& m11() const { return m11_; }
    const Rat& tx() const { return tx_; }
    const Rat& ty() const { return ty_; }

private:
    Rat m00_, m01_, m10_, m11_, tx_, ty_;
    Rat det_;
};

// A nonempty set of distinct points held in sorted order.
class PointSet {
public:
    explicit PointSet(std::vector<Point> pts);

    std::size_t size() const { return pts_.size(); }
    const std::vector<Point>& points() const { return pts_; }
    const Point& at(std::size_t i) const { return pts_.at(i); }
    bool contains(const Point& p) const;
    std::optional<std::size_t> index_of(const Point& p) const;

    bool operator==(const PointSet&) const = default;

private:
    std::vector<Point> pts_;
};

PointList apply_affine(const AffineMap& T, const PointList& S);
PointSet apply_affine(const AffineMap& T, const PointSet& S);

// The line whose point set is the image of l under T; sides transform by sign(det T).
Line map_line(const AffineMap& T, const Line& l);

// Sign of the cross product (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

bool all_collinear(const std::vector<Point>& pts);

Rat squared_distance(const Point& p, const Point& q);
double distance(const Point& p, const Point& q);

double diameter(const PointSet& s);
Rat x_extent(const PointSet& s);
Rat y_extent(const PointSet& s);

}  // namespace planevar
