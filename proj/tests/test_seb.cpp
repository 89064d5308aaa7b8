#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "onecenter/seb.hpp"
#include "testutil.hpp"

#include <random>

using namespace onecenter;
using testutil::Q;

namespace {
Point P2(long x, long y) { return Point{Q(x), Q(y)}; }
}

TEST_CASE("seb examples") {
    SUBCASE("single point") {
        const auto r = seb({P2(3, -1)});
        CHECK(r.ball.center == P2(3, -1));
        CHECK(r.ball.radius_sq == Q(0));
        CHECK(r.support == std::vector<std::size_t>{0});
    }
    SUBCASE("obtuse triangle: diameter ball") {
        const auto r = seb({P2(0, 0), P2(4, 0), P2(1, 1)});
        CHECK(r.ball.center == P2(2, 0));
        CHECK(r.ball.radius_sq == Q(4));
        CHECK(r.support == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("acute triangle: all three on the boundary") {
        const auto r = seb({P2(0, 0), P2(4, 0), Point{Q(2), Q(7, 2)}});
        CHECK(r.support.size() == 3);
        for (const auto& p : std::vector<Point>{P2(0, 0), P2(4, 0), Point{Q(2), Q(7, 2)}})
            CHECK(sqdist(p, r.ball.center) == r.ball.radius_sq);
    }
    SUBCASE("co-circular square") {
        const auto b = seb_bruteforce({P2(1, 0), P2(0, 1), P2(-1, 0), P2(0, -1)});
        CHECK(b.center == P2(0, 0));
        CHECK(b.radius_sq == Q(1));
        const auto r = seb({P2(1, 0), P2(0, 1), P2(-1, 0), P2(0, -1)});
        CHECK(r.ball == b);
    }
    SUBCASE("two points") {
        CHECK(seb_bruteforce({P2(0, 0), P2(2, 0)}).center == P2(1, 0));
    }
    SUBCASE("duplicate points tolerated") {
        const auto r = seb({P2(0, 0), P2(2, 0), P2(0, 0)});
        CHECK(r.ball.center == P2(1, 0));
    }
}

TEST_CASE("seb equals brute force on random instances with certified support") {
    std::mt19937_64 rng(314159);
    for (int iter = 0; iter < 120; ++iter) {
        const std::size_t d = 2 + iter % 3;
        std::uniform_int_distribution<std::size_t> nd(1, 9);
        const std::size_t n = nd(rng);
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i) pts.push_back(testutil::random_point(rng, d, 10, 3));

        const auto r = seb(pts, 7 + iter);
        const auto brute = seb_bruteforce(pts);
        CHECK(r.ball == brute);

        // every input point enclosed, exactly
        for (const auto& p : pts) CHECK(sqdist(p, r.ball.center) <= r.ball.radius_sq);

        // support certificate: affinely independent boundary subset whose
        // circumball is the ball, with the center in its convex hull
        std::vector<Point> sup;
        for (auto i : r.support) sup.push_back(pts[i]);
        REQUIRE(!sup.empty());
        CHECK(sup.size() <= d + 1);
        for (const auto& p : sup) CHECK(sqdist(p, r.ball.center) == r.ball.radius_sq);
        if (sup.size() >= 2) {
            const auto cb = circumcenter(sup);
            CHECK(cb.center == r.ball.center);
            CHECK(cb.radius_sq == r.ball.radius_sq);
            CHECK(is_boundary_support(sup, pts));
        }
        // deterministic in the seed
        const auto r2 = seb(pts, 7 + iter);
        CHECK(r2.ball == r.ball);
        CHECK(r2.support == r.support);
    }
}

TEST_CASE("welzl order independence") {
    std::mt19937_64 rng(11);
    std::vector<Point> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(testutil::random_point(rng, 3, 9, 2));
    const auto a = seb(pts, 1);
    const auto b = seb(pts, 999);
    CHECK(a.ball == b.ball); // ball unique regardless of shuffle
}
