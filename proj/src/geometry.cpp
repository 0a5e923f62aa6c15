#include "planevar/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace planevar {

std::string rat_to_string(const Rat& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    std::string out = num.str();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

namespace {

Int int_from_decimal(const std::string& text) {
    if (text.empty()) throw ValidationError("empty integer literal");
    std::size_t i = text[0] == '-' ? 1 : 0;
    if (i == text.size()) throw ValidationError("bare sign is not an integer: '" + text + "'");
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ValidationError("bad integer literal: '" + text + "'");
        }
    }
    return Int(text);
}

}  // namespace

Rat rat_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rat(int_from_decimal(text));
    }
    Int num = int_from_decimal(text.substr(0, slash));
    Int den = int_from_decimal(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator: '" + text + "'");
    return Rat(num, den);
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

Rat rat_from_double(double v) {
    if (!std::isfinite(v)) throw ValidationError("non-finite value");
    if (v == 0.0) return Rat(0);
    int exp = 0;
    double m = std::frexp(v, &exp);
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Int num(mant);
    if (exp >= 0) {
        return Rat(num << exp);
    }
    return Rat(num, Int(1) << -exp);
}

bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

Line::Line(Rat a, Rat b, Rat c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ == 0 && b_ == 0) throw ValidationError("line requires (a, b) != (0, 0)");
    Rat scale = rat_abs(a_ != 0 ? a_ : b_);
    a_ /= scale;
    b_ /= scale;
    c_ /= scale;
}

bool operator<(const Line& lhs, const Line& rhs) {
    if (lhs.a() != rhs.a()) return lhs.a() < rhs.a();
    if (lhs.b() != rhs.b()) return lhs.b() < rhs.b();
    return lhs.c() < rhs.c();
}

Rat line_value(const Line& l, const Point& p) { return l.a() * p.x + l.b() * p.y + l.c(); }

int side(const Line& l, const Point& p) { return sign_of(line_value(l, p)); }

Point project_to_line(const Line& l, const Point& p) {
    Rat v = line_value(l, p);
    Rat n2 = l.a() * l.a() + l.b() * l.b();
    Rat scale = v / n2;
    return Point{p.x - scale * l.a(), p.y - scale * l.b()};
}

PointList project_to_line(const Line& l, const PointList& S) {
    PointList out;
    out.reserve(S.size());
    for (const Point& p : S) out.push_back(project_to_line(l, p));
    return out;
}

AffineMap::AffineMap(Rat m00, Rat m01, Rat m10, Rat m11, Rat tx, Rat ty)
    : m00_(std::move(m00)),
      m01_(std::move(m01)),
      m10_(std::move(m10)),
      m11_(std::move(m11)),
      tx_(std::move(tx)),
      ty_(std::move(ty)),
      det_(m00_ * m11_ - m01_ * m10_) {
    if (det_ == 0) throw SingularMap("affine map has zero determinant");
}

Point AffineMap::apply(const Point& p) const {
    return Point{m00_ * p.x + m01_ * p.y + tx_, m10_ * p.x + m11_ * p.y + ty_};
}

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    if (pts_.empty()) throw ValidationError("point set must be nonempty");
    std::sort(pts_.begin(), pts_.end());
    for (std::size_t i = 1; i < pts_.size(); ++i) {
        if (pts_[i] == pts_[i - 1]) {
            throw ValidationError("duplicate point in set: (" + rat_to_string(pts_[i].x) +
                                  ", " + rat_to_string(pts_[i].y) + ")");
        }
    }
}

bool PointSet::contains(const Point& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
}

std::optional<std::size_t> PointSet::index_of(const Point& p) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
    if (it == pts_.end() || !(*it == p)) return std::nullopt;
    return static_cast<std::size_t>(it - pts_.begin());
}

PointList apply_affine(const AffineMap& T, const PointList& S) {
    PointList out;
    out.reserve(S.size());
    for (const Point& p : S) out.push_back(T.apply(p));
    return out;
}

PointSet apply_affine(const AffineMap& T, const PointSet& S) {
    return PointSet(apply_affine(T, S.points()));
}

Line map_line(const AffineMap& T, const Line& l) {
    // Row vector (a, b) times the adjugate of M, then fix c so the image passes
    // through the image points: c' = det * c - (a', b') . t.
    Rat ap = l.a() * T.m11() - l.b() * T.m10();
    Rat bp = -l.a() * T.m01() + l.b() * T.m00();
    Rat cp = T.det() * l.c() - (ap * T.tx() + bp * T.ty());
    return Line(ap, bp, cp);
}

int orientation(const Point& p, const Point& q, const Point& r) {
    Rat cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sign_of(cross);
}

bool all_collinear(const std::vector<Point>& pts) {
    if (pts.size() < 3) return true;
    // Anchor on the first pair of distinct points.
    std::size_t second = 1;
    while (second < pts.size() && pts[second] == pts[0]) ++second;
    if (second == pts.size()) return true;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (orientation(pts[0], pts[second], pts[i]) != 0) return false;
    }
    return true;
}

Rat squared_distance(const Point& p, const Point& q) {
    Rat dx = p.x - q.x;
    Rat dy = p.y - q.y;
    return dx * dx + dy * dy;
}

double distance(const Point& p, const Point& q) {
    return std::sqrt(rat_to_double(squared_distance(p, q)));
}

double diameter(const PointSet& s) {
    Rat best(0);
    const auto& pts = s.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Rat d2 = squared_distance(pts[i], pts[j]);
            if (d2 > best) best = d2;
        }
    }
    return std::sqrt(rat_to_double(best));
}

Rat x_extent(const PointSet& s) {
    const auto& pts = s.points();
    Rat lo = pts[0].x, hi = pts[0].x;
    for (const Point& p : pts) {
        if (p.x < lo) lo = p.x;
        if (p.x > hi) hi = p.x;
    }
    return hi - lo;
}

Rat y_extent(const PointSet& s) {
    const auto& pts = s.points();
    Rat lo = pts[0].y, hi = pts[0].y;
    for (const Point& p : pts) {
        if (p.y < lo) lo = p.y;
        if (p.y > hi) hi = p.y;
    }
    return hi - lo;
}

}  // namespace planevar
