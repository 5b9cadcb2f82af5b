#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tverwind/errors.hpp"
#include "tverwind/exactgeom.hpp"

using namespace tverwind;

namespace {

Rational2 P(long x, long y) { return {Rational(x), Rational(y)}; }

ClosedPLCurve tri(Rational2 a, Rational2 b, Rational2 c) { return ClosedPLCurve({a, b, c}); }

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == frac(1, 2));
    CHECK(parse_rational("-12.375") == frac(-99, 8));
    CHECK(parse_rational("7") == 7);
    CHECK(to_string(frac(6, -4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("orient examples") {
    CHECK(orient(P(0, 0), P(1, 0), P(0, 1)) == 1);
    CHECK(orient(P(0, 0), P(1, 1), P(2, 2)) == 0);
    CHECK(orient(P(0, 0), P(0, 1), P(1, 0)) == -1);
}

TEST_CASE("segment_intersect examples") {
    auto r = segment_intersect({P(0, 0), P(2, 2)}, {P(0, 2), P(2, 0)});
    REQUIRE(r.kind == IntersectionResult::Kind::point);
    CHECK(r.point() == P(1, 1));

    CHECK(segment_intersect({P(0, 0), P(1, 0)}, {P(0, 1), P(1, 1)}).empty());

    r = segment_intersect({P(0, 0), P(2, 0)}, {P(1, 0), P(3, 0)});
    REQUIRE(r.kind == IntersectionResult::Kind::overlap);
    CHECK(r.overlap() == Segment{P(1, 0), P(2, 0)});

    r = segment_intersect({P(0, 0), P(1, 0)}, {P(1, 0), P(1, 5)});
    REQUIRE(r.kind == IntersectionResult::Kind::point);
    CHECK(r.point() == P(1, 0));

    r = segment_intersect({P(0, 0), P(1, 0)}, {P(1, 0), P(2, 0)});
    REQUIRE(r.kind == IntersectionResult::Kind::point);
    CHECK(r.point() == P(1, 0));

    r = segment_intersect({P(0, 0), P(3, 1)}, {P(0, 1), P(3, 0)});
    REQUIRE(r.kind == IntersectionResult::Kind::point);
    CHECK(r.point() == Rational2{frac(3, 2), frac(1, 2)});
}

TEST_CASE("point_on_curve examples") {
    const auto c = tri(P(0, 0), P(2, 0), P(1, 2));
    CHECK(point_on_curve(P(1, 0), c));
    CHECK_FALSE(point_on_curve(P(1, 1), c));
    CHECK_FALSE(point_on_curve(P(5, 5), c));
    CHECK(point_on_curve(P(2, 0), c));
}

TEST_CASE("winding_number examples") {
    const auto c = tri(P(0, 0), P(4, 0), P(0, 4));
    CHECK(winding_number(c, P(1, 1)) == 1);
    CHECK(winding_number(c, P(10, 10)) == 0);
    const ClosedPLCurve twice({P(0, 0), P(4, 0), P(0, 4), P(0, 0), P(4, 0), P(0, 4)});
    CHECK(winding_number(twice, P(1, 1)) == 2);
    CHECK(winding_number(twice, P(1, 1)) ==
          oracle::quadrant_winding({P(0, 0), P(4, 0), P(0, 4), P(0, 0), P(4, 0), P(0, 4)}, P(1, 1)));
    CHECK(winding_number(c.reversed(), P(1, 1)) == -1);
    CHECK_THROWS_AS(winding_number(c, P(2, 0)), PointOnCurve);
}

TEST_CASE("winding_number with the ray through curve vertices") {
    // p = (1, 1): the ray y = 1 hits the vertex (3, 1) and runs along no edge.
    const ClosedPLCurve diamond({P(2, 0), P(3, 1), P(2, 2), P(1, 3), P(0, 1)});
    CHECK(winding_number(diamond, P(1, 1)) == 1);
    // Horizontal edge on the ray line.
    const ClosedPLCurve box({P(0, 0), P(4, 0), P(4, 1), P(6, 1), P(6, 3), P(0, 3)});
    CHECK(winding_number(box, P(1, 1)) == 1);
    CHECK(winding_number(box, P(5, 2)) == 1);
    CHECK(winding_number(box, Rational2{5, frac(1, 2)}) == 0);
}

TEST_CASE("in_w_neq0 examples") {
    const auto c = tri(P(0, 0), P(4, 0), P(0, 4));
    CHECK(in_w_neq0(c, P(1, 1)));
    CHECK(in_w_neq0(c, P(2, 0)));
    CHECK_FALSE(in_w_neq0(c, P(10, 10)));
    // Figure eight: the two lobes wind with opposite signs.
    const ClosedPLCurve eight({P(0, 0), P(2, 2), P(2, 0), P(0, 2)});
    CHECK(winding_number(eight, Rational2{frac(1, 2), 1}) != 0);
    CHECK(winding_number(eight, Rational2{frac(1, 2), 1}) == -winding_number(eight, Rational2{frac(3, 2), 1}));
}

TEST_CASE("closed curve validation") {
    CHECK_THROWS_AS(ClosedPLCurve({P(0, 0), P(1, 0)}), InvalidArgument);
    CHECK_THROWS_AS(ClosedPLCurve({P(0, 0), P(1, 0), P(1, 0)}), InvalidArgument);
    CHECK_THROWS_AS(ClosedPLCurve({P(0, 0), P(1, 0), P(0, 0)}), InvalidArgument);
}

TEST_CASE("property: orient antisymmetry and intersection symmetry") {
    Rng rng(11);
    for (int i = 0; i < 400; ++i) {
        const auto a = fixtures::grid_point(rng, -3, 3), b = fixtures::grid_point(rng, -3, 3),
                   c = fixtures::grid_point(rng, -3, 3), d = fixtures::grid_point(rng, -3, 3);
        CHECK(orient(a, b, c) == -orient(b, a, c));
        CHECK(orient(a, b, c) == -orient(a, c, b));
        CHECK(orient(a, b, c) == -orient(c, b, a));
        CHECK(orient(a, b, c) == orient(b, c, a));
        if (a == b || c == d) continue;
        const auto st = segment_intersect({a, b}, {c, d});
        const auto ts = segment_intersect({c, d}, {a, b});
        const auto rev = segment_intersect({b, a}, {d, c});
        CHECK(st.kind == ts.kind);
        CHECK(st.witness == ts.witness);
        CHECK(st.witness == rev.witness);
        std::vector<Rational2> meet;
        oracle::seg_meet(a, b, c, d, meet);
        if (st.kind == IntersectionResult::Kind::point) {
            for (const auto& m : meet) CHECK(m == st.point());
            CHECK(!meet.empty());
        } else if (st.kind == IntersectionResult::Kind::empty) {
            CHECK(meet.empty());
        } else {
            CHECK(std::find(meet.begin(), meet.end(), st.overlap().a) != meet.end());
            CHECK(std::find(meet.begin(), meet.end(), st.overlap().b) != meet.end());
        }
    }
}

TEST_CASE("property: winding number matches oracles and symmetries") {
    Rng rng(12);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        const auto pts = fixtures::random_curve(rng);
        const ClosedPLCurve c(pts);
        const Rational2 p = fixtures::grid_point(rng, -12, 12, 2);
        if (oracle::on_polyline(p, pts, true)) {
            CHECK(point_on_curve(p, c));
            CHECK(in_w_neq0(c, p));
            continue;
        }
        ++checked;
        const int w = winding_number(c, p);
        CHECK(w == oracle::quadrant_winding(pts, p));
        CHECK(w == oracle::angle_winding(pts, p));
        CHECK(winding_number(c.reversed(), p) == -w);
        CHECK(in_w_neq0(c.reversed(), p) == in_w_neq0(c, p));

        std::vector<Rational2> rot(pts.begin() + 1, pts.end());
        rot.push_back(pts.front());
        CHECK(winding_number(ClosedPLCurve(rot), p) == w);

        const Rational2 shift{frac(7, 3), frac(-5, 2)};
        const Rational scale = frac(9, 4);
        std::vector<Rational2> moved;
        for (const auto& q : pts) moved.push_back({q.x * scale + shift.x, q.y * scale + shift.y});
        CHECK(winding_number(ClosedPLCurve(moved), Rational2{p.x * scale + shift.x, p.y * scale + shift.y}) == w);
    }
    CHECK(checked > 300);
}
