#include "support.hpp"

#include "planevar/candidates.hpp"
#include "planevar/crossing.hpp"
#include "planevar/point_list.hpp"
#include "planevar/prng.hpp"

using namespace planevar;
using planevar::testing::realize;

namespace {

Point pt(int x, int y) { return Point{Rat(x), Rat(y)}; }

PointList zigzag() {
    return {pt(1, 0), pt(2, 1), pt(3, 0), pt(5, 0), pt(4, 1),
            pt(5, -1), pt(6, -1), pt(7, 1), pt(8, 0)};
}

PointList real_axis(std::initializer_list<int> xs) {
    PointList out;
    for (int x : xs) out.push_back(pt(x, 0));
    return out;
}

Point draw_point(Prng& rng) {
    return Point{Rat(rng.range(-8, 8), 1 + rng.index(4)),
                 Rat(rng.range(-8, 8), 1 + rng.index(4))};
}

PointList draw_list(Prng& rng, std::size_t max_len) {
    std::size_t len = 1 + rng.index(max_len);
    std::size_t pool_size = 1 + rng.index(len);
    PointList pool;
    for (std::size_t i = 0; i < pool_size; ++i) pool.push_back(draw_point(rng));
    PointList out;
    for (std::size_t i = 0; i < len; ++i) out.push_back(pool[rng.index(pool_size)]);
    return out;
}

}  // namespace

TEST_CASE("segment classification basics") {
    CHECK(classify_segment({1, -1}, 1) == SegmentClass::Type1);
    CHECK(classify_segment({-1, 1}, 1) == SegmentClass::Type1);
    CHECK(classify_segment({1, 1}, 1) == SegmentClass::NonCrossing);
    CHECK(classify_segment({0, 1}, 1) == SegmentClass::Type2);
    CHECK(classify_segment({1, 0}, 1) == SegmentClass::Type3);
    CHECK_THROWS_AS(classify_segment({1, -1}, 0), IndexOutOfRange);
    CHECK_THROWS_AS(classify_segment({1, -1}, 2), IndexOutOfRange);
}

TEST_CASE("zigzag against the horizontal axis") {
    PointList S = zigzag();
    PerturbedLine axis{Line(Rat(0), Rat(1), Rat(0)), NoPerturb{}};

    CHECK(vf_on_line(S, axis) == 5);
    CHECK(vf_components(S, axis) == 5);

    SignVector sv = sign_vector(S, axis);
    SignVector expected{0, 1, 0, 0, 1, -1, -1, 1, 0};
    CHECK(sv == expected);

    std::vector<SegmentClass> classes;
    for (std::size_t j = 1; j < sv.size(); ++j) classes.push_back(classify_segment(sv, j));
    std::vector<SegmentClass> want{SegmentClass::Type2,       SegmentClass::Type3,
                                   SegmentClass::NonCrossing, SegmentClass::NonCrossing,
                                   SegmentClass::Type1,       SegmentClass::NonCrossing,
                                   SegmentClass::Type1,       SegmentClass::Type3};
    CHECK(classes == want);

    CrossingCounter counter;
    for (int s : sv) counter.push(s);
    CHECK(counter.count == 5);
}

TEST_CASE("maximum over candidate lines on the real axis") {
    VfMax m = vf_max(real_axis({2, 4, 1, 1, 3, 2}));
    CHECK(m.value == 4);

    PointList S = real_axis({2, 4, 1, 1, 3, 2});
    Line concrete = realize(m.witness, S);
    CHECK(vf_on_line(S, PerturbedLine{concrete, NoPerturb{}}) == 4);
}

TEST_CASE("single point counts once exactly on the line") {
    PointList S{pt(2, 3)};
    CHECK(vf_on_line(S, {Line(Rat(1), Rat(0), Rat(-2)), NoPerturb{}}) == 1);
    CHECK(vf_on_line(S, {Line(Rat(1), Rat(0), Rat(0)), NoPerturb{}}) == 0);
    CHECK(vf_max(S).value == 1);
}

TEST_CASE("symbolic moves match realized rational lines") {
    Prng rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        PointList S = draw_list(rng, 8);
        for (const PerturbedLine& l : candidate_lines(S)) {
            Line concrete = realize(l, S);
            SignVector symbolic = sign_vector(S, l);
            SignVector realized;
            for (const Point& p : S) realized.push_back(side(concrete, p));
            REQUIRE(symbolic == realized);
            REQUIRE(vf_on_line(S, l) ==
                    vf_on_line(S, PerturbedLine{concrete, NoPerturb{}}));
        }
    }
}

TEST_CASE("both counting rules agree everywhere") {
    Prng rng(7151);
    for (int trial = 0; trial < 400; ++trial) {
        PointList S = draw_list(rng, 9);
        for (const PerturbedLine& l : candidate_lines(S)) {
            REQUIRE(vf_on_line(S, l) == vf_components(S, l));
        }
    }
}

TEST_CASE("list surgery lemmas") {
    Prng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        PointList S = draw_list(rng, 8);
        int base = vf_max(S).value;

        CHECK(vf_max(reverse(S)).value == base);
        CHECK(vf_max(dedup_consecutive(S)).value == base);

        std::size_t pos = rng.index(S.size() + 1);
        Point w = rng.chance(0.5) ? S[rng.index(S.size())] : draw_point(rng);
        CHECK(vf_max(insert(S, pos, w)).value >= base);

        int n = static_cast<int>(S.size()) - 1;
        CHECK(base >= 1);
        CHECK(base <= std::max(n, 1));
    }
}

TEST_CASE("projection cannot raise the count") {
    Prng rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        PointList S = draw_list(rng, 8);
        Point a = draw_point(rng);
        Point b = draw_point(rng);
        if (a == b) continue;
        Rat la = b.y - a.y;
        Rat lb = a.x - b.x;
        Line l(la, lb, -(la * a.x + lb * a.y));
        CHECK(vf_max(project_to_line(l, S)).value <= vf_max(S).value);
    }
}

TEST_CASE("line families are shared and consistent") {
    PointList S = real_axis({2, 4, 1, 1, 3, 2});
    std::vector<Point> support(S);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    LineFamily family(support);
    CHECK(vf_max_value(S, family) == 4);
    CHECK_FALSE(family.rows().empty());

    CHECK_THROWS_AS(LineFamily(std::vector<Point>{}), ValidationError);
    CHECK_THROWS_AS(LineFamily({pt(1, 0), pt(0, 0)}), ValidationError);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(vf_max(PointList{}), ValidationError);
    PerturbedLine axis{Line(Rat(0), Rat(1), Rat(0)), NoPerturb{}};
    CHECK_THROWS_AS(vf_on_line(PointList{}, axis), ValidationError);
    CHECK_THROWS_AS(
        sign_vector(PointList{pt(0, 0)},
                    PerturbedLine{Line(Rat(0), Rat(1), Rat(0)), TranslateToSide{2}}),
        InvalidPerturbation);
    CHECK_THROWS_AS(
        sign_vector(PointList{pt(0, 0)},
                    PerturbedLine{Line(Rat(0), Rat(1), Rat(0)),
                                  RotateAboutPoint{pt(3, 1), 1}}),
        InvalidPerturbation);
}
