#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "onecenter/errors.hpp"
#include "onecenter/fpv.hpp"
#include "testutil.hpp"

using namespace onecenter;
using testutil::Q;

namespace {

Point P2(long x, long y) { return Point{Q(x), Q(y)}; }
const Interval kDomain(Q(-5), Q(5));

bool plane_eq(const Hyperplane& h, const std::vector<Rat>& normal, const Rat& offset) {
    // equality up to positive or negative scaling
    for (std::size_t i = 0; i < normal.size(); ++i) {
        if (h.normal[i] == 0 && normal[i] == 0) continue;
        if (h.normal[i] == 0 || normal[i] == 0) return false;
        const Rat s = h.normal[i] / normal[i];
        for (std::size_t j = 0; j < normal.size(); ++j)
            if (h.normal[j] != s * normal[j]) return false;
        return h.offset == s * offset;
    }
    return false;
}

} // namespace

TEST_CASE("bisector examples") {
    CHECK(plane_eq(bisector(P2(0, 4), P2(-2, 2)), {Q(1), Q(1)}, Q(2)));  // x + y = 2
    CHECK(plane_eq(bisector(P2(0, 0), P2(2, 0)), {Q(1), Q(0)}, Q(1)));   // x = 1
    CHECK(plane_eq(bisector(P2(0, 0), P2(0, 2)), {Q(0), Q(1)}, Q(1)));   // y = 1
    CHECK_THROWS_AS(bisector(P2(1, 1), P2(1, 1)), IdenticalPoints);
    // every point of the bisector is exactly equidistant
    const Hyperplane h = bisector(P2(0, 4), P2(-2, 2));
    const Point x{Q(1, 3), Q(5, 3)};
    Rat dot(0);
    for (std::size_t i = 0; i < 2; ++i) dot += h.normal[i] * x.x[i];
    CHECK(dot == h.offset);
    CHECK(sqdist(x, P2(0, 4)) == sqdist(x, P2(-2, 2)));
}

TEST_CASE("face_membership examples") {
    const std::vector<Point> s{P2(0, 4), P2(-2, 2)};
    CHECK(face_membership(Point{Q(1, 3), Q(5, 3)}, {0, 1}, s));

    const std::vector<Point> two{P2(2, 0), P2(-1, 0)};
    CHECK(face_membership(P2(0, 0), {0}, two));        // farther from (2,0)
    CHECK_FALSE(face_membership(P2(0, 0), {1}, two));  // not farther from (-1,0)

    const std::vector<Point> tri{P2(0, 0), P2(4, 0), P2(1, 3)};
    const auto cc = circumcenter(tri);
    CHECK(face_membership(cc.center, {0, 1, 2}, tri));
    CHECK_FALSE(face_membership(cc.center, {0, 1}, tri)); // third point is equidistant, not nearer
}

TEST_CASE("curve_hyperplane_roots examples") {
    SUBCASE("first worked arc against x+y=2") {
        const RatCurve arc({RatFn(Poly({Q(0), Q(1, 2)})), RatFn(Q(2))}, Interval(Q(-4), Q(4)));
        const auto pr = curve_hyperplane_roots(arc, bisector(P2(0, 4), P2(-2, 2)));
        CHECK_FALSE(pr.identically_on_plane);
        REQUIRE(pr.roots.size() == 1);
        CHECK(pr.roots[0].is_rational());
        CHECK(pr.roots[0].value() == Q(0));
    }
    SUBCASE("line against x=1") {
        const RatCurve c({RatFn(Poly::variable()), RatFn(Q(0))}, kDomain);
        Hyperplane h;
        h.normal = {Q(1), Q(0)};
        h.offset = Q(1);
        const auto pr = curve_hyperplane_roots(c, h);
        REQUIRE(pr.roots.size() == 1);
        CHECK(pr.roots[0].value() == Q(1));
    }
    SUBCASE("cubic first arc (t^3/2, 2) against x+y=2") {
        const RatCurve arc({RatFn(Poly::monomial(3, Q(1, 2))), RatFn(Q(2))}, Interval(Q(-2), Q(2)));
        const auto pr = curve_hyperplane_roots(arc, bisector(P2(0, 4), P2(-2, 2)));
        REQUIRE(pr.roots.size() == 1);
        CHECK(pr.roots[0].is_rational());
        CHECK(pr.roots[0].value() == Q(0));
    }
    SUBCASE("curve riding the plane is a signal, not a root list") {
        const RatCurve c({RatFn(Poly::variable()), RatFn(Poly({Q(2), Q(-1)}))}, kDomain); // y = 2-x
        Hyperplane h;
        h.normal = {Q(1), Q(1)};
        h.offset = Q(2);
        const auto pr = curve_hyperplane_roots(c, h);
        CHECK(pr.identically_on_plane);
        CHECK(pr.roots.empty());
    }
}

TEST_CASE("curve_face_intersections examples") {
    const std::vector<Point> s{P2(0, 4), P2(-2, 2)};
    SUBCASE("first arc joins the second static at t=0") {
        const RatCurve arc({RatFn(Poly({Q(0), Q(1, 2)})), RatFn(Q(2))}, Interval(Q(-4), Q(4)));
        const auto events = curve_face_intersections(arc, {0}, s);
        REQUIRE(events.size() == 1);
        CHECK(events[0].time.is_rational());
        CHECK(events[0].time.value() == Q(0));
        CHECK(events[0].joining == std::vector<std::size_t>{1});
    }
    SUBCASE("cubic first arc: same event at t=0") {
        const RatCurve arc({RatFn(Poly::monomial(3, Q(1, 2))), RatFn(Q(2))}, Interval(Q(-2), Q(2)));
        const auto events = curve_face_intersections(arc, {0}, s);
        REQUIRE(events.size() == 1);
        CHECK(events[0].time.value() == Q(0));
    }
    SUBCASE("constant curve strictly inside a cell: no events") {
        const RatCurve arc = RatCurve::constant(P2(-1, 3), kDomain); // center of CB(s)
        const auto events = curve_face_intersections(arc, {0, 1}, s);
        CHECK(events.empty());
    }
    SUBCASE("membership filter drops crossings outside the face") {
        // statics: bisector(0,1) is x=0; the third point dominates left of x=-2
        const std::vector<Point> s3{P2(1, 0), P2(-1, 0), P2(5, 0)}; // collinear is fine for fpv queries
        const RatCurve c({RatFn(Poly::variable()), RatFn(Q(10))}, kDomain);
        const auto events = curve_face_intersections(c, {0}, s3);
        // crossing of bisector(0,1) at t=0 fails: (5,0) is farther than (1,0) there
        for (const auto& fe : events) CHECK(fe.joining != std::vector<std::size_t>{1});
    }
}

TEST_CASE("face intersection times certify equidistance to arbitrary precision") {
    // algebraic crossing: (t^3/3, 5) against the bisector x = 1/2
    const std::vector<Point> s{P2(0, 0), P2(1, 0)};
    const RatCurve c({RatFn(Poly::monomial(3, Q(1, 3))), RatFn(Q(5))}, Interval(Q(0), Q(2)));
    const auto events = curve_face_intersections(c, {0}, s);
    REQUIRE(events.size() == 1);
    CHECK_FALSE(events[0].time.is_rational());
    CHECK(events[0].joining == std::vector<std::size_t>{1});

    // the equidistance residual at a deeply refined sample drops below 1e-18
    Rat tiny(1);
    for (int i = 0; i < 20; ++i) tiny /= 10; // 1e-20
    const Rat sample = events[0].time.approx(tiny);
    const Point x = c.eval(sample);
    const Rat residual = rat_abs(sqdist(x, s[0]) - sqdist(x, s[1]));
    Rat bound(1);
    for (int i = 0; i < 18; ++i) bound /= 10;
    CHECK(residual < bound);
}

TEST_CASE("curve_sphere_intersections examples") {
    const Ball ball{P2(0, 0), Q(4)};
    SUBCASE("line through: IN then OUT") {
        const RatCurve c({RatFn(Poly::variable()), RatFn(Q(0))}, kDomain);
        const auto cs = curve_sphere_intersections(c, ball);
        REQUIRE(cs.size() == 2);
        CHECK(cs[0].time.value() == Q(-2));
        CHECK(cs[0].label == CrossLabel::In);
        CHECK(cs[1].time.value() == Q(2));
        CHECK(cs[1].label == CrossLabel::Out);
    }
    SUBCASE("tangent line") {
        const RatCurve c({RatFn(Poly::variable()), RatFn(Q(2))}, kDomain);
        const auto cs = curve_sphere_intersections(c, ball);
        REQUIRE(cs.size() == 1);
        CHECK(cs[0].time.value() == Q(0));
        CHECK(cs[0].label == CrossLabel::Tangent);
    }
    SUBCASE("mobile that never reaches the static ball") {
        const Ball b2{P2(-1, 3), Q(2)};
        const RatCurve c({RatFn(Poly::variable()), RatFn(Q(0))}, kDomain);
        CHECK(curve_sphere_intersections(c, b2).empty());
    }
    SUBCASE("labels alternate after tangent removal") {
        // quartic path crossing the circle four times
        const RatCurve c({RatFn(Poly::variable()), RatFn(Poly({Q(-3), Q(0), Q(1)}) * Poly::constant(Q(1, 2)))},
                         kDomain);
        auto cs = curve_sphere_intersections(c, ball);
        std::erase_if(cs, [](const SphereCrossing& x) { return x.label == CrossLabel::Tangent; });
        for (std::size_t i = 1; i < cs.size(); ++i) CHECK(cs[i].label != cs[i - 1].label);
    }
}
