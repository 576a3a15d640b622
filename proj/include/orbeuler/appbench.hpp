#pragma once

// Applications: line arrangements, cusp counts on plane curves, canonical
// degree of curves on surfaces of general type, and the plane-curve form of
// the log inequality.

#include <map>
#include <vector>

#include "orbeuler/ratkit.hpp"

namespace orbeuler {

// --- line arrangements -------------------------------------------------------

struct ArrangementData {
    Integer k;
    std::map<Integer, Integer> t;  // r -> number of points on exactly r lines
};

enum class ArrangementVerdict { Holds, HypothesisNotMet, Violation };
const char* to_string(ArrangementVerdict v);

struct ArrangementReport {
    ArrangementVerdict verdict = ArrangementVerdict::HypothesisNotMet;
    Integer sum_rt;
    Integer bound_rt;  // ceil(k^2/3 + k)
    Integer sum_r2t;
    Integer bound_r2t;  // ceil(4k^2/3)
    bool equality_rt = false;
    bool equality_r2t = false;
    Integer largest_r;  // largest r with t_r > 0 (0 if none)

    Integer slack_rt() const { return sum_rt - bound_rt; }
    Integer slack_r2t() const { return sum_r2t - bound_r2t; }
};

/// Throws InvalidInput unless sum t_r r(r-1) = k(k-1), r >= 2, t_r >= 0.
void validate_arrangement(const ArrangementData& a);

/// Lower bounds on sum r t_r and sum r^2 t_r for arrangements without a
/// point on more than 2k/3 lines.
ArrangementReport check_arrangement(const ArrangementData& a);

// --- cusps -------------------------------------------------------------------

/// Local orbifold Euler number of (C^2, alpha * {x^2 = y^3}).
Rational cusp_euler(const Rational& alpha);

struct CuspBoundQuery {
    Integer d;
    Rational alpha;
};

/// Cost of one ordinary cusp in the plane-curve inequality: 3(alpha + 1 - e).
Rational cusp_cost(const Rational& alpha);

/// Right side on P^2: -3 alpha d + (3 alpha - alpha^2) d^2.
Rational cusp_capacity(const CuspBoundQuery& q);

/// alpha * d >= 3, i.e. K + alpha C is pseudoeffective on the plane.
bool cusp_query_pseudoeffective(const CuspBoundQuery& q);

/// Largest s with s * cusp_cost <= cusp_capacity. Requires 0 < alpha <= 5/6 and
/// alpha d >= 3 (InvalidInput otherwise).
Integer cusp_count_bound(const CuspBoundQuery& q);

/// Asymptotic bound on s(d)/d^2 from one alpha in (1/6, 5/6]:
/// (3 alpha - alpha^2) / (3 (alpha + 1 - (3/2)(alpha - 5/6)^2)).
Rational cusp_ratio(const Rational& alpha);

struct CuspRatioOptimum {
    Rational alpha_star;
    Rational ratio_star;
};

/// Minimizes cusp_ratio over alpha = j / grid_denominator in (1/6, 5/6].
/// Every probe is itself a valid bound. Requires grid_denominator >= 48.
CuspRatioOptimum cusp_ratio_optimize(const Integer& grid_denominator);

// --- curves on surfaces of general type ---------------------------------------

/// ordinary = false: bound valid for c1^2 > 2 c2 and any curve.
/// ordinary = true:  bound valid for c1^2 > c2 and curves with ordinary
/// singularities only. Throws InvalidInput when the hypothesis fails.
bool canonical_degree_applicable(const Integer& c1_sq, const Integer& c2, bool ordinary);
Rational canonical_degree_bound(const Integer& c1_sq, const Integer& c2, const Integer& genus, bool ordinary);

// --- plane-curve inequality ------------------------------------------------------

struct CurvePointData {
    Integer mu;
    Rational e_orb;
};

struct PlaneCurveReport {
    Rational lhs;  // sum 3(alpha (mu - 1) + 1 - e_orb)
    Rational rhs;  // 3c2 - c1^2 + alpha K.C + (3 alpha - alpha^2) C^2
    Rational slack;  // rhs - lhs
    bool holds = false;
    bool equality = false;
};

/// Caller warrants (X, alpha C) lc and K + alpha C pseudoeffective.
PlaneCurveReport check_plane_curve_inequality(const Integer& c1_sq, const Integer& c2, const Rational& alpha,
                                   const Integer& k_dot_c, const Integer& c_sq,
                                   const std::vector<CurvePointData>& points);

}  // namespace orbeuler
