#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "onecenter/errors.hpp"
#include "onecenter/poly.hpp"
#include "onecenter/ratfn.hpp"
#include "onecenter/roots.hpp"
#include "testutil.hpp"

#include <random>

using namespace onecenter;
using testutil::Q;

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_from_string("2/3") == Q(2, 3));
    CHECK(rat_from_string("-1.25") == Q(-5, 4));
    CHECK(rat_from_string("1e-3") == Q(1, 1000));
    CHECK(rat_from_string("2.5e3") == Q(2500));
    CHECK(rat_from_string("  -7 ") == Q(-7));
    CHECK(rat_to_string(Q(-5, 4)) == "-5/4");
    CHECK(rat_to_decimal(Q(1, 3), 6) == "0.333333");
    CHECK(rat_to_decimal(Q(-1, 2), 3) == "-0.500");
    CHECK_THROWS_AS(rat_from_string("1/0"), ValidationError);
    CHECK_THROWS_AS(rat_from_string("abc"), ValidationError);
}

TEST_CASE("poly arithmetic") {
    const Poly t = Poly::variable();

    SUBCASE("mul (t+1)(t-1) = t^2 - 1") {
        const Poly prod = (t + Poly::constant(Q(1))) * (t - Poly::constant(Q(1)));
        CHECK(prod == Poly({Q(-1), Q(0), Q(1)}));
    }
    SUBCASE("derivative of t^3") {
        CHECK(Poly::monomial(3).derivative() == Poly::monomial(2, Q(3)));
    }
    SUBCASE("squarefree part of (t-1)^2 (t+2)") {
        const Poly p = poly_pow(t - Poly::constant(Q(1)), 2) * (t + Poly::constant(Q(2)));
        const Poly sf = poly_squarefree_part(p);
        const Poly expect = (t - Poly::constant(Q(1))) * (t + Poly::constant(Q(2)));
        CHECK(poly_primitive(sf) == poly_primitive(expect));
    }
    SUBCASE("eval, divmod, gcd") {
        const Poly p = Poly({Q(1), Q(-2), Q(1)}); // (t-1)^2
        CHECK(p.eval(Q(3)) == Q(4));
        const auto [q, r] = poly_divmod(p, t - Poly::constant(Q(1)));
        CHECK(r.is_zero());
        CHECK(q == t - Poly::constant(Q(1)));
        const Poly g = poly_gcd(p, t - Poly::constant(Q(1)));
        CHECK(g == Poly({Q(-1), Q(1)}));
    }
}

TEST_CASE("ratfn arithmetic") {
    const Poly t = Poly::variable();

    SUBCASE("eq: t == (t^2+4t)/(t+4)") {
        const RatFn a(t);
        const RatFn b(t * t + Poly::monomial(1, Q(4)), t + Poly::constant(Q(4)));
        CHECK(ratfn_eq(a, b));
        CHECK(a == b); // canonical forms coincide
    }
    SUBCASE("derivative of t^2/(2(t+4)) at 0 is 0") {
        const RatFn f(t * t, Poly({Q(8), Q(2)}));
        CHECK(f.derivative().eval(Q(0)) == Q(0));
    }
    SUBCASE("eval (-t^2+4t+16)/(2(t+4)) at 2 = 5/3") {
        const RatFn f(Poly({Q(16), Q(4), Q(-1)}), Poly({Q(8), Q(2)}));
        CHECK(f.eval(Q(2)) == Q(5, 3));
    }
    SUBCASE("pole detection") {
        const RatFn f(Poly::constant(Q(1)), t);
        CHECK_THROWS_AS(f.eval(Q(0)), PoleAtSample);
    }
    SUBCASE("canonical denominator is primitive with positive leading coefficient") {
        const RatFn f(t, Poly({Q(0), Q(-2)})); // t / (-2t) = -1/2
        CHECK(f.num() == Poly::constant(Q(-1, 2)));
        CHECK(f.den() == Poly::constant(Q(1)));
    }
}

TEST_CASE("ratfn eq is an equivalence relation and implies eval agreement") {
    std::mt19937_64 rng(20240817);
    int checked_samples = 0;
    for (int iter = 0; iter < 40; ++iter) {
        Poly num = testutil::random_poly(rng, 3);
        Poly den = testutil::random_poly(rng, 2);
        while (den.is_zero()) den = testutil::random_poly(rng, 2);
        const RatFn base(num, den);

        Poly common = testutil::random_poly(rng, 2);
        while (common.is_zero()) common = testutil::random_poly(rng, 2);
        const RatFn same(num * common, den * common);
        const RatFn other = base + RatFn(Q(1));

        CHECK(ratfn_eq(base, base));                    // reflexive
        CHECK(ratfn_eq(base, same));                    // blown-up representation
        CHECK(ratfn_eq(same, base));                    // symmetric
        CHECK_FALSE(ratfn_eq(base, other));
        if (ratfn_eq(base, same) && ratfn_eq(same, base)) CHECK(base == same); // canonical

        for (int s = 0; s < 100 && checked_samples < 400; ++s) {
            const Rat x = testutil::random_rat(rng, 50, 7);
            if (base.den().eval(x) == 0 || same.den().eval(x) == 0) continue;
            CHECK(base.eval(x) == same.eval(x));
            ++checked_samples;
        }
    }
    CHECK(checked_samples > 0);
}

TEST_CASE("sturm_count examples") {
    CHECK(sturm_count(Poly({Q(-2), Q(0), Q(1)}), Interval(Q(0), Q(2))) == 1);   // t^2-2
    CHECK(sturm_count(Poly({Q(1), Q(0), Q(1)}), Interval(Q(-10), Q(10))) == 0); // t^2+1
    CHECK(sturm_count(Poly({Q(0), Q(-1), Q(0), Q(1)}), Interval(Q(-2), Q(2))) == 3); // t^3-t
    // half-open semantics: root at the left endpoint is excluded
    CHECK(sturm_count(Poly({Q(0), Q(1)}), Interval(Q(0), Q(1))) == 0);
    CHECK(sturm_count(Poly({Q(0), Q(1)}), Interval(Q(-1), Q(0))) == 1);
}

TEST_CASE("isolate_roots examples") {
    SUBCASE("sqrt(2)") {
        const auto roots = isolate_roots(Poly({Q(-2), Q(0), Q(1)}), Interval(Q(0), Q(2)));
        REQUIRE(roots.size() == 1);
        CHECK_FALSE(roots[0].even_multiplicity());
        const Rat approx = roots[0].approx(Q(1, 1000000000));
        CHECK(rat_abs(approx - rat_from_string("1.41421356237")) < Q(1, 100000000));
    }
    SUBCASE("(t-1)^2: double root, even parity") {
        const Poly p = poly_pow(Poly({Q(-1), Q(1)}), 2);
        const auto roots = isolate_roots(p, Interval(Q(0), Q(2)));
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].is_rational());
        CHECK(roots[0].value() == Q(1));
        CHECK(roots[0].even_multiplicity());
    }
    SUBCASE("closed-interval endpoints included") {
        const Poly p = Poly({Q(0), Q(-2), Q(0), Q(1)}) * Poly::constant(Q(1)); // t(t^2-2)
        const auto roots = isolate_roots(p, Interval(Q(0), Q(2)));
        REQUIRE(roots.size() == 2); // 0 and sqrt(2)
        CHECK(roots[0].is_rational());
        CHECK(roots[0].value() == Q(0));
    }
}

TEST_CASE("refine examples") {
    SUBCASE("sqrt(2) to 1e-12") {
        const auto roots = isolate_roots(Poly({Q(-2), Q(0), Q(1)}), Interval(Q(0), Q(2)));
        REQUIRE(roots.size() == 1);
        const Rat w(1, Int("1000000000000"));
        const AlgebraicTime r = refine(roots[0], w);
        CHECK(r.isolate().width() <= w);
        const Rat target = rat_from_string("1.414213562373");
        CHECK(r.lower() <= target + w);
        CHECK(r.upper() >= target - w);
    }
    SUBCASE("cube root of 4 to 1e-9") {
        const auto roots = isolate_roots(Poly({Q(-4), Q(0), Q(0), Q(1)}), Interval(Q(0), Q(2)));
        REQUIRE(roots.size() == 1);
        const Rat w(1, 1000000000);
        const Rat approx = roots[0].approx(w);
        CHECK(rat_abs(approx - rat_from_string("1.587401052")) < Q(1, 100000000));
    }
    SUBCASE("rational root is an exact point interval") {
        const auto roots = isolate_roots(Poly({Q(-3), Q(2)}), Interval(Q(0), Q(2)));
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].is_rational());
        CHECK(roots[0].value() == Q(3, 2));
        const AlgebraicTime r = refine(roots[0], Q(1, 1000));
        CHECK(r.isolate().is_point());
    }
}

TEST_CASE("algebraic time comparison") {
    const auto sqrt2 = isolate_roots(Poly({Q(-2), Q(0), Q(1)}), Interval(Q(0), Q(2)));
    const auto sqrt2_other = isolate_roots(Poly({Q(-4), Q(0), Q(2)}), Interval(Q(1), Q(3)));
    const auto cbrt4 = isolate_roots(Poly({Q(-4), Q(0), Q(0), Q(1)}), Interval(Q(0), Q(2)));
    REQUIRE(sqrt2.size() == 1);
    REQUIRE(sqrt2_other.size() == 1);
    REQUIRE(cbrt4.size() == 1);

    CHECK(compare(sqrt2[0], sqrt2_other[0]) == 0); // same root, different defining data
    CHECK(compare(sqrt2[0], cbrt4[0]) < 0);        // 1.414... < 1.587...
    CHECK(compare(cbrt4[0], sqrt2[0]) > 0);
    CHECK(compare(AlgebraicTime(Q(3, 2)), cbrt4[0]) < 0);
    CHECK(compare(sqrt2[0], AlgebraicTime(Q(3, 2))) < 0);
    CHECK(compare(AlgebraicTime(Q(2)), AlgebraicTime(Q(2))) == 0);
}

TEST_CASE("sign_at certifies polynomial signs at algebraic points") {
    const auto roots = isolate_roots(Poly({Q(-2), Q(0), Q(1)}), Interval(Q(0), Q(2)));
    REQUIRE(roots.size() == 1);
    AlgebraicTime sqrt2 = roots[0];
    CHECK(sign_at(Poly({Q(-2), Q(0), Q(1)}), sqrt2) == 0);  // its own polynomial
    CHECK(sign_at(Poly({Q(-15, 10), Q(1)}), sqrt2) < 0);    // t - 1.5 < 0 at sqrt2
    CHECK(sign_at(Poly({Q(-14, 10), Q(1)}), sqrt2) > 0);    // t - 1.4 > 0 at sqrt2
    CHECK(sign_at(Poly({Q(-4), Q(0), Q(2)}), sqrt2) == 0);  // 2t^2-4 shares the root
}

TEST_CASE("sturm agrees with the bisection oracle on random polynomials") {
    std::mt19937_64 rng(424242);
    int done = 0;
    while (done < 200) {
        Poly p = testutil::random_poly(rng, 8);
        if (p.degree() < 1) continue;
        const Interval iv(Q(-8), Q(8));
        const auto oracle = testutil::BisectionOracle::isolate(p, iv.lo, iv.hi, 60);
        if (!oracle) continue; // oracle abstained; resample

        const auto mine = isolate_roots(p, iv);
        REQUIRE(mine.size() == oracle->size());
        const Rat w(1, Int("10000000000"));
        for (std::size_t i = 0; i < mine.size(); ++i) {
            const Rat approx = mine[i].approx(w);
            CHECK(approx >= (*oracle)[i].lo - w);
            CHECK(approx <= (*oracle)[i].hi + w);
        }
        // sturm_count over the full window matches (half-open left endpoint
        // compensated by an explicit check)
        int expect = static_cast<int>(oracle->size());
        if (poly_squarefree_part(p).eval(iv.lo) == 0) --expect;
        CHECK(sturm_count(p, iv) == expect);
        ++done;
    }
}

TEST_CASE("isolating intervals are pairwise disjoint with unit sturm count") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 60; ++iter) {
        Poly p = testutil::random_poly(rng, 7);
        if (p.degree() < 1) continue;
        const Interval iv(Q(-6), Q(6));
        const auto roots = isolate_roots(p, iv);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            // exactly one root of the defining polynomial in each interval
            if (!roots[i].is_rational()) {
                CHECK(sturm_count(roots[i].defining(), roots[i].isolate()) == 1);
                // refinement preserves the count
                AlgebraicTime r = refine(roots[i], Q(1, 1 << 20));
                if (!r.is_rational()) CHECK(sturm_count(r.defining(), r.isolate()) == 1);
            }
            if (i + 1 < roots.size()) {
                CHECK(roots[i].upper() <= roots[i + 1].lower());
                CHECK(compare(roots[i], roots[i + 1]) < 0);
            }
        }
    }
}
