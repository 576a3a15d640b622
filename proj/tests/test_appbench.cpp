#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "orbeuler/appbench.hpp"
#include "orbeuler/localsing.hpp"

using namespace orbeuler;

namespace {

ArrangementData arrangement(long k, std::map<long, long> t) {
    ArrangementData a;
    a.k = k;
    for (auto [r, n] : t) {
        a.t[Integer(r)] = n;
    }
    return a;
}

ArrangementData fermat_arrangement(long m) {
    std::map<long, long> t{{3, m * m}};
    t[m] += 3;
    return arrangement(3 * m, t);
}

}  // namespace

TEST_CASE("arrangement examples") {
    auto r = check_arrangement(arrangement(6, {{2, 3}, {3, 4}}));
    CHECK(r.verdict == ArrangementVerdict::Holds);
    CHECK(r.sum_rt == 18);
    CHECK(r.bound_rt == 18);
    CHECK(r.sum_r2t == 48);
    CHECK(r.bound_r2t == 48);
    CHECK(r.equality_rt);
    CHECK(r.equality_r2t);

    r = check_arrangement(arrangement(4, {{2, 6}}));
    CHECK(r.verdict == ArrangementVerdict::Holds);
    CHECK(r.slack_rt() == 2);
    CHECK(r.slack_r2t() == 2);

    r = check_arrangement(arrangement(5, {{4, 1}, {2, 4}}));
    CHECK(r.verdict == ArrangementVerdict::HypothesisNotMet);
    CHECK(r.sum_rt == 12);
    CHECK(r.bound_rt == 14);
}

TEST_CASE("arrangement input is checked") {
    CHECK_THROWS_AS(check_arrangement(arrangement(6, {{2, 3}, {3, 3}})), InvalidInput);
    CHECK_THROWS_AS(check_arrangement(arrangement(3, {{1, 3}})), InvalidInput);
    CHECK_THROWS_AS(check_arrangement(arrangement(3, {{2, -1}, {3, 1}, {2, 0}})), InvalidInput);
    CHECK_THROWS_AS(check_arrangement(arrangement(0, {})), InvalidInput);
    CHECK_NOTHROW(validate_arrangement(arrangement(1, {})));
}

TEST_CASE("Fermat-type arrangements are extremal") {
    for (long m : {2, 3, 4, 5, 10}) {
        CAPTURE(m);
        const auto a = fermat_arrangement(m);
        if (m == 3) {
            CHECK(a.t.at(3) == 12);
        }
        const auto r = check_arrangement(a);
        CHECK(r.verdict == ArrangementVerdict::Holds);
        CHECK(r.equality_rt);
        CHECK(r.equality_r2t);
    }
}

TEST_CASE("cusp local values") {
    CHECK(cusp_euler(Rational(1, 12)) == Rational(5, 6));
    CHECK(cusp_euler(Rational(1, 2)) == Rational(1, 6));
    CHECK(cusp_euler(Rational(9, 10)) == Rational(0));
    CHECK_THROWS_AS(cusp_euler(Rational(2)), InvalidInput);
}

TEST_CASE("cusp table agrees with the star evaluator") {
    oracles::RationalSampler rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational alpha = rng.in_unit(500);
        const StarQuotient s{Integer(1), {StarArm{2, 1, 0}, StarArm{3, 1, 0}, StarArm{1, 0, alpha}}};
        CHECK(cusp_euler(alpha) == euler_star(s).value);
        CHECK(cusp_euler(alpha) == oracles::cusp_table(alpha));
    }
}

TEST_CASE("cusp counts") {
    CHECK(cusp_count_bound({12, Rational(1, 2)}) == 40);
    CHECK(cusp_count_bound({6, Rational(1, 2)}) == 9);
    CHECK(cusp_count_bound({6, Rational(5, 6)}) == 9);
    CHECK(cusp_cost(Rational(1, 2)) == Rational(4));
    CHECK(cusp_capacity({12, Rational(1, 2)}) == Rational(162));
    CHECK_THROWS_AS(cusp_count_bound({6, Rational(1, 3)}), InvalidInput);
    CHECK_THROWS_AS(cusp_count_bound({6, Rational(9, 10)}), InvalidInput);
    CHECK_THROWS_AS(cusp_count_bound({6, Rational(0)}), InvalidInput);
}

TEST_CASE("cusp bound is monotone in the degree") {
    for (const Rational& alpha : {Rational(1, 2), Rational(1, 3), Rational(5, 6), Rational(7, 24)}) {
        Integer prev = -1;
        for (long d = 1; d <= 80; ++d) {
            if (!cusp_query_pseudoeffective({d, alpha})) {
                continue;
            }
            const Integer s = cusp_count_bound({d, alpha});
            CHECK(s >= prev);
            prev = s;
        }
    }
}

TEST_CASE("cusp count ties are included") {
    // 9 cusps cost exactly the capacity at d = 6, alpha = 1/2.
    const CuspBoundQuery q{6, Rational(1, 2)};
    CHECK(Rational(9) * cusp_cost(q.alpha) == cusp_capacity(q));
}

TEST_CASE("cusp ratio") {
    CHECK(cusp_ratio(Rational(5, 6)) == Rational(65, 198));
    CHECK_THROWS_AS(cusp_ratio(Rational(1, 6)), InvalidInput);
    CHECK_THROWS_AS(cusp_ratio(Rational(6, 7)), InvalidInput);

    const auto coarse = cusp_ratio_optimize(48);
    CHECK(coarse.alpha_star == Rational(15, 48));
    CHECK(coarse.ratio_star <= Rational(31, 100));
    CHECK(coarse.ratio_star < Rational(5, 16));
    CHECK(coarse.ratio_star > Rational(9, 32));
    CHECK_THROWS_AS(cusp_ratio_optimize(47), InvalidInput);

    // No probe can beat the true infimum.
    oracles::RationalSampler rng(59);
    for (int trial = 0; trial < 300; ++trial) {
        const long den = rng.integer(7, 3000);
        const long num = rng.integer(den / 6 + 1, 5 * den / 6);
        CHECK(cusp_ratio(Rational(num, den)).approx() >= oracles::cusp_ratio_infimum() - 1e-12);
    }
}

TEST_CASE("canonical degree bounds") {
    CHECK(canonical_degree_bound(9, 3, 0, false) == Rational(0));
    CHECK(canonical_degree_bound(8, 3, 2, false) == Rational(29, 2));
    CHECK(canonical_degree_bound(9, 3, 2, true) == Rational(6));
    CHECK_THROWS_AS(canonical_degree_bound(6, 3, 0, false), InvalidInput);
    CHECK_THROWS_AS(canonical_degree_bound(3, 3, 0, true), InvalidInput);
    CHECK_THROWS_AS(canonical_degree_bound(9, 3, -1, true), InvalidInput);
    CHECK(canonical_degree_applicable(9, 3, false));
    CHECK_FALSE(canonical_degree_applicable(6, 3, false));
    CHECK(canonical_degree_applicable(4, 3, true));
}

TEST_CASE("rational and elliptic curves are excluded on ball quotients") {
    for (long c2 = 1; c2 <= 30; ++c2) {
        for (long g : {0L, 1L}) {
            for (bool ordinary : {false, true}) {
                CHECK(canonical_degree_bound(3 * c2, c2, g, ordinary) <= Rational(0));
            }
        }
    }
}

TEST_CASE("plane curve inequality") {
    const std::vector<CurvePointData> cusps(9, CurvePointData{2, Rational(1, 6)});
    auto r = check_plane_curve_inequality(9, 3, Rational(1, 2), -18, 36, cusps);
    CHECK(r.lhs == Rational(36));
    CHECK(r.rhs == Rational(36));
    CHECK(r.holds);
    CHECK(r.equality);

    r = check_plane_curve_inequality(9, 3, Rational(1, 2), -18, 36, {});
    CHECK(r.lhs == Rational(0));
    CHECK(r.holds);

    r = check_plane_curve_inequality(9, 3, Rational(1, 2), -12, 16, {{1, Rational(1, 4)}});
    CHECK(r.lhs == Rational(9, 4));

    CHECK_THROWS_AS(check_plane_curve_inequality(9, 3, Rational(1, 2), -18, 36, {{0, 0}}), InvalidInput);
}
