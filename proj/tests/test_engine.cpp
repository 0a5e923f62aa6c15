#include "support.hpp"

#include <complex>

#include "planevar/bounds.hpp"
#include "planevar/estimate.hpp"
#include "planevar/prng.hpp"
#include "planevar/search.hpp"

using namespace planevar;

namespace {

Point pt(int x, int y) { return Point{Rat(x), Rat(y)}; }

FunctionTable axis_table(std::vector<Rat> xs, std::vector<std::complex<double>> vals) {
    PointList pts;
    for (const Rat& x : xs) pts.push_back(Point{x, Rat(0)});
    return FunctionTable::from_pairs(pts, std::move(vals));
}

FunctionTable square_zeta() {
    PointList pts{pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)};
    return FunctionTable::from_pairs(pts, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

std::complex<double> grid_value(Prng& rng, bool real_only) {
    return {static_cast<double>(rng.range(-64, 64)) / 16.0,
            real_only ? 0.0 : static_cast<double>(rng.range(-64, 64)) / 16.0};
}

FunctionTable draw_collinear(Prng& rng, bool real_only) {
    std::vector<Rat> xs;
    std::size_t n = 2 + rng.index(4);
    while (xs.size() < n) {
        Rat x(rng.range(-8, 8), 1 + rng.index(3));
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    std::vector<std::complex<double>> vals;
    for (std::size_t i = 0; i < n; ++i) vals.push_back(grid_value(rng, real_only));
    return axis_table(std::move(xs), std::move(vals));
}

}  // namespace

TEST_CASE("traversal sums and ratios") {
    FunctionTable f = axis_table({Rat(0), Rat(1, 2), Rat(1)}, {2.0, 1.0, 2.0});
    PointList walk{pt(0, 0), Point{Rat(1, 2), Rat(0)}, pt(1, 0)};
    CHECK(cvar(f, walk) == 2.0);
    CHECK(ratio(f, walk) == 2.0);

    PointList there_and_back{pt(0, 0), pt(1, 0), pt(0, 0)};
    CHECK(cvar(f, there_and_back) == 0.0);
}

TEST_CASE("amplified cycles count crossings as 2N + 1") {
    PointList tri{pt(0, 0), pt(1, 0), pt(0, 1)};
    FunctionTable f = FunctionTable::from_pairs(tri, {0.0, 1.0, 0.0});

    for (int reps : {1, 2, 5, 25}) {
        AmplifiedList amp = amplify_cycle(f, tri, reps);
        CHECK(amp.crossing_count == 2 * reps + 1);
        CHECK(amp.list.size() == 1 + 3 * static_cast<std::size_t>(reps));
        CHECK(amp.ratio_value ==
              doctest::Approx(2.0 * reps / (2.0 * reps + 1.0)).epsilon(1e-12));
    }

    PointList square_cycle{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
    FunctionTable g = square_zeta();
    CHECK(amplify_cycle(g, square_cycle, 2).crossing_count == 5);

    CHECK_THROWS_AS(amplify_cycle(f, PointList{pt(0, 0), pt(0, 0)}, 3), DegenerateCycle);
    CHECK_THROWS_AS(amplify_cycle(f, tri, 0), ValidationError);
}

TEST_CASE("collinear variation is the sorted traversal sum") {
    FunctionTable f = axis_table({Rat(0), Rat(1, 2), Rat(1)}, {2.0, 1.0, 2.0});
    CHECK(exact_collinear(f) == 2.0);

    FunctionTable g = axis_table({Rat(3), Rat(0), Rat(1)}, {{0, 1}, {2, 0}, {1, 1}});
    CHECK(exact_collinear(g) == doctest::Approx(std::abs(std::complex<double>(1, 1) -
                                                         std::complex<double>(2, 0)) +
                                                std::abs(std::complex<double>(0, 1) -
                                                         std::complex<double>(1, 1)))
                                    .epsilon(1e-15));

    CHECK_THROWS_AS(exact_collinear(square_zeta()), NotCollinear);
}

TEST_CASE("collinear variation is reflection invariant to the bit") {
    Prng rng(5150);
    for (int trial = 0; trial < 200; ++trial) {
        FunctionTable f = draw_collinear(rng, false);
        PointList mirrored;
        for (const Point& p : f.domain().points()) mirrored.push_back(Point{-p.x, p.y});
        std::vector<std::complex<double>> vals(f.values());
        FunctionTable g = FunctionTable::from_pairs(mirrored, std::move(vals));
        CHECK(exact_collinear(f) == exact_collinear(g));
    }
}

TEST_CASE("triangle variation is half the pairwise sum") {
    PointList tri{pt(-1, 1), pt(0, 0), pt(1, 1)};
    FunctionTable f = FunctionTable::from_pairs(tri, {1.0, 0.0, 1.0});
    CHECK(triangle_exact(f) == 1.0);

    PointList perm{pt(1, 1), pt(-1, 1), pt(0, 0)};
    FunctionTable g = FunctionTable::from_pairs(perm, {1.0, 1.0, 0.0});
    CHECK(triangle_exact(g) == triangle_exact(f));

    CHECK_THROWS_AS(triangle_exact(axis_table({Rat(0), Rat(1), Rat(2)}, {1.0, 2.0, 3.0})),
                    CollinearPoints);
    CHECK_THROWS_AS(triangle_exact(square_zeta()), ValidationError);
}

TEST_CASE("convex hulls and polygon bounds") {
    std::vector<Point> hull =
        convex_hull_ccw({pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)});
    std::vector<Point> want{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
    CHECK(hull == want);

    CHECK(strictly_convex_position(PointSet({pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)})));
    CHECK_FALSE(strictly_convex_position(PointSet({pt(0, 0), pt(1, 0), pt(2, 0)})));
    CHECK_FALSE(
        strictly_convex_position(PointSet({pt(0, 0), pt(4, 0), pt(0, 4), pt(1, 1)})));

    PolygonBounds pb = polygon_bounds(square_zeta());
    CHECK(pb.lower == 2.0);
    CHECK(pb.upper == 3.0);
    CHECK(pb.hull.size() == 4);

    PointList dent{pt(0, 0), pt(4, 0), pt(0, 4), pt(1, 1)};
    FunctionTable bad = FunctionTable::from_pairs(dent, {0.0, 1.0, 2.0, 3.0});
    CHECK_THROWS_AS(polygon_bounds(bad), NotConvexPosition);
}

TEST_CASE("lipschitz and extension bounds") {
    FunctionTable f = axis_table({Rat(0), Rat(1)}, {0.0, 1.0});
    CHECK(lipschitz_constant(f) == doctest::Approx(1.0));
    CHECK(lipschitz_bound(f) == doctest::Approx(2.0));

    PointList vee{pt(-1, 1), pt(0, 0), pt(1, 1)};
    PointSet sigma(vee);
    FunctionTable u = axis_table({Rat(-1), Rat(0), Rat(1)}, {1.0, 0.0, 1.0});
    CHECK(extension_bound(u, sigma) == 2.0);

    FunctionTable off = axis_table({Rat(-1), Rat(0), Rat(2)}, {1.0, 0.0, 1.0});
    CHECK_THROWS_AS(extension_bound(off, sigma), ProjectionMismatch);
}

TEST_CASE("certified estimates on the pinned configurations") {
    SearchConfig cfg;

    VariationEstimate collinear =
        certified_estimate(axis_table({Rat(0), Rat(1, 2), Rat(1)}, {2.0, 1.0, 2.0}), cfg);
    CHECK(collinear.lower == 2.0);
    CHECK(collinear.upper == 2.0);
    CHECK(collinear.exact);
    CHECK(collinear.upper_rule == UpperRule::Exact1D);

    VariationEstimate square = certified_estimate(square_zeta(), cfg);
    CHECK(square.lower == 2.0);
    CHECK(square.upper == 3.0);
    CHECK_FALSE(square.exact);
    CHECK(square.upper_rule == UpperRule::PolygonUpper);

    PointList vee{pt(-1, 1), pt(0, 0), pt(1, 1)};
    FunctionTable folded = FunctionTable::from_pairs(vee, {1.0, 0.0, 1.0});
    VariationEstimate tri = certified_estimate(folded, cfg);
    CHECK(tri.lower == 1.0);
    CHECK(tri.upper == 1.0);
    CHECK(tri.exact);
    CHECK(tri.upper_rule == UpperRule::TriangleExact);

    VariationEstimate c = variation_constant(PointSet({pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)}), cfg);
    CHECK(c.lower == 2.0);
    CHECK(c.upper == 2.0);
    CHECK(c.exact);
}

TEST_CASE("joined splits give sandwich bounds, foreign splits are refused") {
    FunctionTable f =
        axis_table({Rat(0), Rat(1), Rat(2), Rat(3)}, {0.0, 1.0, 0.0, 1.0});
    PointSet left({pt(0, 0), pt(1, 0), pt(2, 0)});
    PointSet right({pt(1, 0), pt(2, 0), pt(3, 0)});
    CHECK(join_convexly(left, right));

    VariationEstimate joint = join_bound(f, left, right, SearchConfig{});
    CHECK(joint.lower == 2.0);
    CHECK(joint.upper == 4.0);
    CHECK(joint.upper_rule == UpperRule::JoinConvexUpper);

    PointSet odds({Point{Rat(0), Rat(0)}, Point{Rat(1), Rat(0)}, Point{Rat(1, 3), Rat(0)},
                   Point{Rat(1, 5), Rat(0)}, Point{Rat(1, 7), Rat(0)}});
    PointSet evens({Point{Rat(0), Rat(0)}, Point{Rat(1, 2), Rat(0)},
                    Point{Rat(1, 4), Rat(0)}, Point{Rat(1, 6), Rat(0)}});
    CHECK_FALSE(join_convexly(odds, evens));

    FunctionTable g = axis_table({Rat(0), Rat(1, 7), Rat(1, 6), Rat(1, 5), Rat(1, 4),
                                  Rat(1, 3), Rat(1, 2), Rat(1)},
                                 {0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0});
    CHECK_THROWS_AS(join_bound(g, odds, evens, SearchConfig{}), NotJoinedConvexly);
}

TEST_CASE("search is deterministic and monotone in its limits") {
    Prng rng(881);
    for (int trial = 0; trial < 60; ++trial) {
        FunctionTable f = draw_collinear(rng, rng.chance(0.5));

        SearchConfig small{2, 3, 0, 0};
        SearchConfig large{4, 9, 0, 0};
        SearchOutcome a = search_sup(f, small);
        SearchOutcome b = search_sup(f, large);
        CHECK(b.lower >= a.lower);

        SearchOutcome again = search_sup(f, large);
        CHECK(again.lower == b.lower);
        CHECK(again.witness == b.witness);
    }
}

TEST_CASE("constant functions settle on the shortest witness") {
    FunctionTable f = axis_table({Rat(0), Rat(1), Rat(2)}, {4.0, 4.0, 4.0});
    SearchOutcome out = search_sup(f, SearchConfig{});
    CHECK(out.lower == 0.0);
    CHECK(out.witness.size() == 1);
}

TEST_CASE("searched ratios never beat the closed triangle form") {
    Prng rng(3141);
    for (int trial = 0; trial < 80; ++trial) {
        PointList tri{pt(0, 0), pt(1 + static_cast<int>(rng.index(3)), 0),
                      pt(0, 1 + static_cast<int>(rng.index(3)))};
        std::vector<std::complex<double>> vals;
        for (int i = 0; i < 3; ++i) vals.push_back(grid_value(rng, false));
        FunctionTable f = FunctionTable::from_pairs(tri, std::move(vals));

        double ceiling = triangle_exact(f);
        double searched = search_sup(f, SearchConfig{5, 12, 0, 0}).lower;
        CHECK(searched <= ceiling + 1e-9 * std::max(1.0, ceiling));
    }
}
