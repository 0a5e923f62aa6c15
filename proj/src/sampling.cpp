#include "planevar/sampling.hpp"

#include <algorithm>
#include <set>

namespace planevar {

namespace {

const int kDens[] = {1, 2, 3, 4, 5, 8, 16};

} // namespace

Rat random_rational(Prng& rng, int max_num) {
    int den = kDens[rng.index(std::size(kDens))];
    std::int64_t num = rng.range(-static_cast<std::int64_t>(max_num) * den,
                                 static_cast<std::int64_t>(max_num) * den);
    return Rat(Int(num), Int(den));
}

Point random_point(Prng& rng) {
    return Point{random_rational(rng), random_rational(rng)};
}

PointList random_list(Prng& rng, std::size_t max_len, bool allow_repeats) {
    std::size_t len = 1 + rng.index(max_len);
    PointList out;
    out.reserve(len);
    if (allow_repeats) {
        // Draw from a small pool so exact duplicates and revisits are common.
        std::size_t pool_size = 1 + rng.index(len);
        PointList pool;
        pool.reserve(pool_size);
        for (std::size_t i = 0; i < pool_size; ++i) pool.push_back(random_point(rng));
        for (std::size_t i = 0; i < len; ++i) out.push_back(pool[rng.index(pool_size)]);
    } else {
        for (std::size_t i = 0; i < len; ++i) out.push_back(random_point(rng));
    }
    return out;
}

PointSet random_set(Prng& rng, std::size_t min_size, std::size_t max_size) {
    std::size_t target = min_size + rng.index(max_size - min_size + 1);
    std::set<Point> pts;
    while (pts.size() < target) pts.insert(random_point(rng));
    return PointSet(PointList(pts.begin(), pts.end()));
}

std::vector<std::complex<double>> random_values(Prng& rng, std::size_t n, bool real_only) {
    std::vector<std::complex<double>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Sixteenths keep every component exactly representable.
        double re = static_cast<double>(rng.range(-64, 64)) / 16.0;
        double im = real_only ? 0.0 : static_cast<double>(rng.range(-64, 64)) / 16.0;
        out.emplace_back(re, im);
    }
    return out;
}

FunctionTable random_table(Prng& rng, const PointSet& sigma, bool real_only) {
    return FunctionTable(sigma, random_values(rng, sigma.size(), real_only));
}

Line random_line(Prng& rng) {
    for (;;) {
        Point p = random_point(rng);
        Point q = random_point(rng);
        if (p == q) continue;
        Rat a = q.y - p.y;
        Rat b = p.x - q.x;
        return Line(a, b, -(a * p.x + b * p.y));
    }
}

AffineMap random_affine(Prng& rng) {
    for (;;) {
        Rat m00 = random_rational(rng, 4);
        Rat m01 = random_rational(rng, 4);
        Rat m10 = random_rational(rng, 4);
        Rat m11 = random_rational(rng, 4);
        if (m00 * m11 - m01 * m10 == 0) continue;
        return AffineMap(m00, m01, m10, m11, random_rational(rng), random_rational(rng));
    }
}

PointSet random_collinear_set(Prng& rng, std::size_t min_size, std::size_t max_size) {
    std::size_t target = min_size + rng.index(max_size - min_size + 1);
    Point base = random_point(rng);
    Rat dx = random_rational(rng, 4);
    Rat dy = random_rational(rng, 4);
    while (dx == 0 && dy == 0) {
        dx = random_rational(rng, 4);
        dy = random_rational(rng, 4);
    }
    std::set<Rat> params;
    while (params.size() < target) params.insert(random_rational(rng, 4));
    PointList pts;
    for (const Rat& t : params) pts.push_back(Point{base.x + t * dx, base.y + t * dy});
    return PointSet(std::move(pts));
}

PointSet random_convex_set(Prng& rng, std::size_t min_size, std::size_t max_size) {
    std::size_t target = min_size + rng.index(max_size - min_size + 1);
    // Rational points on a circle: t -> ((1 - t^2, 2 t)) / (1 + t^2).  A line
    // meets a circle at most twice, so any sample of distinct parameters is in
    // strictly convex position.
    std::set<Rat> params;
    while (params.size() < target) {
        std::int64_t den = 1 + rng.range(0, 3);
        std::int64_t num = rng.range(-12, 12);
        params.insert(Rat(Int(num), Int(den)));
    }
    Rat scale(1 + static_cast<int>(rng.index(4)));
    Point center = random_point(rng);
    PointList pts;
    for (const Rat& t : params) {
        Rat denom = 1 + t * t;
        pts.push_back(Point{center.x + scale * (1 - t * t) / denom,
                            center.y + scale * (2 * t) / denom});
    }
    return PointSet(std::move(pts));
}

PointSet random_triangle(Prng& rng) {
    for (;;) {
        std::set<Point> pts;
        while (pts.size() < 3) pts.insert(random_point(rng));
        PointList list(pts.begin(), pts.end());
        if (orientation(list[0], list[1], list[2]) != 0) return PointSet(std::move(list));
    }
}

} // namespace planevar
