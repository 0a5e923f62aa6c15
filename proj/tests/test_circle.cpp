#include "support.hpp"

#include <complex>
#include <limits>

#include "planevar/circle.hpp"
#include "planevar/prng.hpp"

using namespace planevar;

namespace {

CircleSample chi_sample() {
    std::vector<Rat> angles{Rat(0),    Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1),
                            Rat(5, 4), Rat(3, 2), Rat(7, 4), Rat(2)};
    return CircleSample(std::move(angles), {1, 0, 0, 0, 0, 0, 0, 0, 1});
}

CircleSample draw_sample(Prng& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<int> picks;
        std::size_t interior = rng.index(5);
        while (picks.size() < interior) {
            int k = 1 + static_cast<int>(rng.index(15));
            if (std::find(picks.begin(), picks.end(), k) == picks.end()) picks.push_back(k);
        }
        std::sort(picks.begin(), picks.end());

        std::vector<Rat> angles{Rat(0)};
        for (int k : picks) angles.push_back(Rat(k, 8));
        angles.push_back(Rat(2));

        std::vector<std::complex<double>> vals;
        for (std::size_t i = 0; i < angles.size(); ++i) {
            vals.push_back({static_cast<double>(rng.range(-64, 64)) / 16.0,
                            static_cast<double>(rng.range(-64, 64)) / 16.0});
        }
        vals.back() = vals.front();
        try {
            return CircleSample(std::move(angles), std::move(vals));
        } catch (const AmbiguousGeometry&) {
        }
    }
    throw std::runtime_error("sample generation kept degenerating");
}

}  // namespace

TEST_CASE("sample validation is strict") {
    CHECK_THROWS_AS(CircleSample({Rat(0)}, {1.0}), ValidationError);
    CHECK_THROWS_AS(CircleSample({Rat(0), Rat(2)}, {1.0}), ValidationError);
    CHECK_THROWS_AS(CircleSample({Rat(1, 2), Rat(2)}, {1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(CircleSample({Rat(0), Rat(1)}, {1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(CircleSample({Rat(0), Rat(1), Rat(1), Rat(2)}, {1.0, 0.0, 0.0, 1.0}),
                    ValidationError);
    CHECK_THROWS_AS(CircleSample({Rat(0), Rat(2)}, {1.0, 2.0}), ValidationError);

    std::vector<std::complex<double>> bad{
        1.0, std::complex<double>(std::numeric_limits<double>::infinity(), 0.0), 1.0};
    CHECK_THROWS_AS(CircleSample({Rat(0), Rat(1), Rat(2)}, bad), ValidationError);

    // An angle of pi/10^13 lands within coincidence range of angle 0.
    CHECK_THROWS_AS(CircleSample({Rat(0), rat_from_string("1/10000000000000"), Rat(1), Rat(2)},
                                 {1.0, 0.0, 0.0, 1.0}),
                    AmbiguousGeometry);

    // Angles t and 2 - t mirror across the horizontal axis; for small t the
    // pair is nearly collinear with angle 0.
    CHECK_THROWS_AS(CircleSample({Rat(0), Rat(1, 100000), Rat(199999, 100000), Rat(2)},
                                 {1.0, 0.0, 0.0, 1.0}),
                    AmbiguousGeometry);
}

TEST_CASE("quarter angles embed exactly") {
    CircleSample c = chi_sample();
    PointSet pts = c.planar_points();
    CHECK(pts.size() == 8);
    CHECK(pts.contains(Point{Rat(1), Rat(0)}));
    CHECK(pts.contains(Point{Rat(0), Rat(1)}));
    CHECK(pts.contains(Point{Rat(-1), Rat(0)}));
    CHECK(pts.contains(Point{Rat(0), Rat(-1)}));
}

TEST_CASE("indicator on the circle: closed variation 2, planar certificate 1") {
    CircleSample c = chi_sample();
    CHECK(circle_variation_bg(c) == 2.0);

    SearchConfig cfg;
    cfg.cycle_repetitions = 25;
    CircleComparison cc = circle_compare(c, cfg);

    CHECK(cc.var_bg == 2.0);
    CHECK(cc.interval.lower == 1.0);
    CHECK(cc.interval.upper == 1.0);
    CHECK(cc.interval.exact);
    CHECK(cc.crossing_count == 51);
    CHECK(cc.amplified_lower == doctest::Approx(50.0 / 51.0).epsilon(1e-12));
    CHECK(cc.upper_within_bg);
    CHECK(cc.bg_within_doubled);
}

TEST_CASE("both sandwich relations hold on random samples") {
    Prng rng(60091);
    SearchConfig cfg{4, 8, 0, 0};
    for (int trial = 0; trial < 60; ++trial) {
        CircleSample c = draw_sample(rng);
        CircleComparison cc = circle_compare(c, cfg);
        REQUIRE(cc.upper_within_bg);
        REQUIRE(cc.bg_within_doubled);
    }
}

TEST_CASE("a bare two-angle sample degenerates gracefully") {
    CircleSample c({Rat(0), Rat(2)}, {3.0, 3.0});
    CHECK(circle_variation_bg(c) == 0.0);
    CircleComparison cc = circle_compare(c, SearchConfig{});
    CHECK(cc.var_bg == 0.0);
    CHECK(cc.interval.upper == 0.0);
    CHECK(cc.upper_within_bg);
    CHECK(cc.bg_within_doubled);
}
