#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "orbeuler/pairspace.hpp"

using namespace orbeuler;

TEST_CASE("euler number of a curve") {
    CHECK(euler_top_curve(0, {}) == 2);
    CHECK(euler_top_curve(1, {}) == 0);
    CHECK(euler_top_curve(0, {2}) == 1);
    CHECK(euler_top_curve(3, {1, 3}) == -6);
}

TEST_CASE("global orbifold euler number") {
    CHECK(euler_orbifold_global(fixtures::smooth_plane_curve(4, 1)).value == Rational(7));
    CHECK(euler_orbifold_global(fixtures::fermat_pair(2, Rational(2, 3))).value == Rational(1, 3));
    CHECK(euler_orbifold_global(PairDescription{}).value == Rational(3));
}

TEST_CASE("empty boundary gives the topological euler number") {
    for (long e : {3L, 4L, -8L, 100L}) {
        PairDescription p;
        p.surface = {SurfaceMode::Generic, Integer(e), Integer(1)};
        const auto v = euler_orbifold_global(p);
        CHECK(v.value == Rational(e));
        CHECK(v.kind == Exactness::Exact);
    }
}

TEST_CASE("a zero-coefficient component changes nothing") {
    for (auto [name, pair] : fixtures::lc_effective_corpus()) {
        CAPTURE(name);
        if (pair.surface.mode != SurfaceMode::Plane) {
            continue;
        }
        const auto before = euler_orbifold_global(pair);
        pair.components.push_back(fixtures::plane_curve("extra", 0, 5, 6));
        const auto after = euler_orbifold_global(pair);
        CHECK(after.value == before.value);
        CHECK(after.kind == before.kind);
    }
}

TEST_CASE("Fermat family against a hand count") {
    for (int m : {2, 3, 4}) {
        for (const Rational& a : {Rational(1, m), Rational(1, 2), Rational(1, 3), Rational(1, 5)}) {
            if (a * Rational(m) > Rational(2) || a > Rational(2, 3)) {
                continue;
            }
            CAPTURE(m);
            CAPTURE(a.str());
            const auto v = euler_orbifold_global(fixtures::fermat_pair(m, a));
            CHECK(v.value == oracles::fermat_global(m, a));
            CHECK(v.kind == (m >= 4 ? Exactness::UpperBound : Exactness::Exact));
        }
    }
}

TEST_CASE("(K+D)^2") {
    CHECK(pair_kd_squared(fixtures::smooth_plane_curve(4, 1)) == Rational(1));
    CHECK(pair_kd_squared(fixtures::fermat_pair(2, Rational(2, 3))) == Rational(1));
    CHECK(pair_kd_squared(fixtures::concurrent_lines(Rational(2, 3))) == Rational(1));
    // P1 x P1: K + F0 + F1 + S0 + S1 = 0.
    CHECK(pair_kd_squared(fixtures::quadric_square(1, true)) == Rational(0));
    // K^2 + 2 (1/2) K.D + (1/4) D^2 = 8 - 8 + 2.
    CHECK(pair_kd_squared(fixtures::quadric_square(Rational(1, 2), true)) == Rational(2));

    auto missing = fixtures::quadric_square(1, true);
    missing.components[2].pairings.erase("K");
    CHECK_THROWS_AS(pair_kd_squared(missing), InvalidInput);
    auto asym = fixtures::quadric_square(1, true);
    asym.components[2].pairings["F0"] = 3;
    CHECK_THROWS_AS(pair_kd_squared(asym), InvalidInput);
}

TEST_CASE("BMY check verdicts") {
    auto r = check_bmy(fixtures::fermat_pair(2, Rational(2, 3)));
    CHECK(r.lhs == Rational(1));
    CHECK(r.rhs == Rational(1));
    CHECK(r.verdict == Verdict::Proved);
    CHECK(r.equality_flag);

    r = check_bmy(fixtures::smooth_plane_curve(4, 1));
    CHECK(r.lhs == Rational(21));
    CHECK(r.rhs == Rational(1));
    CHECK(r.verdict == Verdict::Proved);
    CHECK_FALSE(r.equality_flag);

    r = check_bmy(fixtures::concurrent_lines(Rational(2, 3)));
    CHECK(r.verdict == Verdict::PreconditionFailed);

    // Not lc: three lines with coefficient 1 through one point.
    auto non_lc = fixtures::fermat_pair(2, 1);
    CHECK(check_bmy(non_lc).verdict == Verdict::PreconditionFailed);

    auto unasserted = fixtures::quadric_square(1, false);
    CHECK(check_bmy(unasserted).verdict == Verdict::PreconditionFailed);
    CHECK(check_bmy(fixtures::quadric_square(1, true)).verdict == Verdict::Proved);

    r = check_bmy(fixtures::fermat_pair(4, Rational(1, 2)));
    CHECK(r.lhs_kind == Exactness::UpperBound);
    CHECK(r.verdict == Verdict::ConsistentUpperBound);
    CHECK_FALSE(r.equality_flag);
}

TEST_CASE("an inconsistent description is reported as a violation") {
    // A smooth sextic claimed to have genus 0 is not a real pair; the checker
    // must say so rather than certify it.
    PairDescription p;
    p.components.push_back(fixtures::plane_curve("C", 1, 6, 0));
    const auto r = check_bmy(p);
    CHECK(r.lhs < r.rhs);
    CHECK(r.verdict == Verdict::Violation);
}

TEST_CASE("never a violation on lc pairs with K+D effective") {
    const auto corpus = fixtures::lc_effective_corpus();
    CHECK(corpus.size() >= 20);
    for (const auto& [name, pair] : corpus) {
        CAPTURE(name);
        CHECK(validate_pair(pair).empty());
        const auto r = check_bmy(pair);
        CHECK(r.verdict != Verdict::Violation);
        CHECK(r.verdict != Verdict::PreconditionFailed);
        CHECK(r.lhs >= r.rhs);
        CHECK((r.e_orb.kind == Exactness::UpperBound) == (r.verdict == Verdict::ConsistentUpperBound));
    }
}

TEST_CASE("curve bound") {
    auto r = check_curve_bound(fixtures::nodal_cubic(1));
    CHECK(r.rhs == Rational(6));
    CHECK(r.lhs == Rational(0));
    CHECK(r.verdict == Verdict::Proved);

    r = check_curve_bound(fixtures::cuspidal_cubic());
    CHECK(r.rhs == Rational(3));
    CHECK(r.lhs == Rational(0));
    CHECK(r.verdict == Verdict::Proved);

    r = check_curve_bound(fixtures::smooth_plane_curve(4, 1));
    CHECK(r.rhs == Rational(21));
    CHECK(r.lhs == Rational(1));

    auto cusp = fixtures::cuspidal_cubic();
    cusp.points[0].m_P.reset();
    CHECK_THROWS_AS(check_curve_bound(cusp), InvalidInput);

    // A quotient point on the surface is outside the smooth-surface statement.
    PairDescription singular = fixtures::smooth_plane_curve(4, 1);
    singular.surface = {SurfaceMode::Generic, Integer(3), Integer(9)};
    singular.effective = true;
    singular.components[0].degree.reset();
    singular.components[0].pairings = {{"K", Integer(-12)}, {"C", Integer(16)}};
    SingularPointData q;
    q.id = "Q";
    q.local = CyclicQuotient{ChainDescriptor::make(2, 1), 0, 0};
    singular.points.push_back(q);
    CHECK(check_curve_bound(singular).verdict == Verdict::PreconditionFailed);
}

TEST_CASE("curve bound and BMY agree when every point is ordinary and exact") {
    for (const auto& [name, pair] : fixtures::lc_effective_corpus()) {
        bool all_ordinary = true;
        for (const auto& p : pair.points) {
            all_ordinary = all_ordinary && std::holds_alternative<Ordinary>(p.local);
        }
        const auto bmy = check_bmy(pair);
        if (!all_ordinary || bmy.lhs_kind != Exactness::Exact) {
            continue;
        }
        CAPTURE(name);
        CHECK(check_curve_bound(pair).verdict == bmy.verdict);
    }
}

TEST_CASE("ball quotient curve bound") {
    CHECK(ball_quotient_curve_bound(0, {}) == Rational(-3));
    CHECK(ball_quotient_curve_bound(2, {{2, 2}}) == Rational(3));
    CHECK(ball_quotient_curve_bound(1, {{1, 2}}) == Rational(-3, 2));
    CHECK_THROWS_AS(ball_quotient_curve_bound(1, {{3, 2}}), InvalidInput);
    CHECK_THROWS_AS(ball_quotient_curve_bound(-1, {}), InvalidInput);
}

TEST_CASE("pair validation") {
    auto p = fixtures::nodal_cubic(1);
    p.components.push_back(p.components[0]);
    CHECK_THROWS_AS(validate_pair(p), InvalidInput);

    p = fixtures::nodal_cubic(1);
    p.points[0].incident[0].component = "nowhere";
    CHECK_THROWS_AS(validate_pair(p), InvalidInput);

    p = fixtures::nodal_cubic(1);
    p.components[0].a = Rational(3, 2);
    CHECK_THROWS_AS(validate_pair(p), InvalidInput);

    p = fixtures::nodal_cubic(1);
    p.surface.e_top = 4;
    CHECK_THROWS_AS(validate_pair(p), InvalidInput);

    p = fixtures::nodal_cubic(1);
    p.components[0].degree.reset();
    CHECK_THROWS_AS(validate_pair(p), InvalidInput);

    p = fixtures::nodal_cubic(1);
    p.points[0].local = Ordinary{{1, Rational(1, 2)}};
    CHECK_THROWS_AS(validate_pair(p), InvalidInput);

    p = fixtures::nodal_cubic(1);
    p.points[0].incident[0].branches = 0;
    CHECK_THROWS_AS(validate_pair(p), InvalidInput);

    p = fixtures::nodal_cubic(1);
    SingularPointData lonely;
    lonely.id = "lonely";
    lonely.local = CyclicQuotient{ChainDescriptor::make(3, 1), 0, 0};
    p.points.push_back(lonely);
    CHECK(validate_pair(p).size() == 1);
}
