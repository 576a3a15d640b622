#include "orbeuler/appbench.hpp"

namespace orbeuler {

const char* to_string(ArrangementVerdict v) {
    switch (v) {
        case ArrangementVerdict::Holds: return "holds";
        case ArrangementVerdict::HypothesisNotMet: return "hypothesis-not-met";
        case ArrangementVerdict::Violation: return "violation";
    }
    return "?";
}

void validate_arrangement(const ArrangementData& a) {
    if (a.k < 1) {
        throw InvalidInput("need at least one line", "k");
    }
    Integer pairs = 0;
    for (const auto& [r, tr] : a.t) {
        if (r < 2) {
            throw InvalidInput("multiplicities r start at 2, got " + r.get_str(), "t");
        }
        if (tr < 0) {
            throw InvalidInput("t_" + r.get_str() + " is negative", "t");
        }
        if (r > a.k && tr > 0) {
            throw InvalidInput("a point cannot lie on more than k lines", "t");
        }
        pairs += tr * r * (r - 1);
    }
    if (pairs != a.k * (a.k - 1)) {
        throw InvalidInput("pair count sum t_r r(r-1) = " + pairs.get_str() + " but k(k-1) = " +
                               Integer(a.k * (a.k - 1)).get_str(),
                           "t");
    }
}

ArrangementReport check_arrangement(const ArrangementData& a) {
    validate_arrangement(a);
    ArrangementReport rep;
    rep.largest_r = 0;
    rep.sum_rt = 0;
    rep.sum_r2t = 0;
    for (const auto& [r, tr] : a.t) {
        if (tr > 0 && r > rep.largest_r) {
            rep.largest_r = r;
        }
        rep.sum_rt += r * tr;
        rep.sum_r2t += r * r * tr;
    }
    const Rational k(a.k);
    rep.bound_rt = rat_ceil(k * k / Rational(3) + k);
    rep.bound_r2t = rat_ceil(Rational(4) * k * k / Rational(3));
    rep.equality_rt = rep.sum_rt == rep.bound_rt;
    rep.equality_r2t = rep.sum_r2t == rep.bound_r2t;
    // 3r > 2k is r > 2k/3.
    if (3 * rep.largest_r > 2 * a.k) {
        rep.verdict = ArrangementVerdict::HypothesisNotMet;
    } else if (rep.sum_rt >= rep.bound_rt && rep.sum_r2t >= rep.bound_r2t) {
        rep.verdict = ArrangementVerdict::Holds;
    } else {
        rep.verdict = ArrangementVerdict::Violation;
    }
    return rep;
}

Rational cusp_euler(const Rational& alpha) {
    if (alpha < Rational(0) || alpha > Rational(1)) {
        throw InvalidInput("alpha outside [0,1]", "alpha");
    }
    if (alpha <= Rational(1, 6)) {
        return Rational(1) - Rational(2) * alpha;
    }
    if (alpha <= Rational(5, 6)) {
        const Rational t = alpha - Rational(5, 6);
        return Rational(3, 2) * t * t;
    }
    return Rational(0);
}

Rational cusp_cost(const Rational& alpha) {
    return Rational(3) * (alpha + Rational(1) - cusp_euler(alpha));
}

Rational cusp_capacity(const CuspBoundQuery& q) {
    const Rational d(q.d);
    return Rational(-3) * q.alpha * d + (Rational(3) * q.alpha - q.alpha * q.alpha) * d * d;
}

bool cusp_query_pseudoeffective(const CuspBoundQuery& q) {
    return q.alpha * Rational(q.d) >= Rational(3);
}

Integer cusp_count_bound(const CuspBoundQuery& q) {
    if (q.d < 1) {
        throw InvalidInput("degree must be positive", "d");
    }
    if (q.alpha.sign() <= 0 || q.alpha > Rational(5, 6)) {
        throw InvalidInput("alpha must lie in (0, 5/6]", "alpha");
    }
    if (!cusp_query_pseudoeffective(q)) {
        throw InvalidInput("alpha*d < 3: K + alpha C is not pseudoeffective", "alpha");
    }
    const Integer s = rat_floor(cusp_capacity(q) / cusp_cost(q.alpha));
    return s < 0 ? Integer(0) : s;
}

Rational cusp_ratio(const Rational& alpha) {
    if (alpha <= Rational(1, 6) || alpha > Rational(5, 6)) {
        throw InvalidInput("alpha must lie in (1/6, 5/6]", "alpha");
    }
    return (Rational(3) * alpha - alpha * alpha) / cusp_cost(alpha);
}

CuspRatioOptimum cusp_ratio_optimize(const Integer& grid_denominator) {
    if (grid_denominator < 48) {
        throw InvalidInput("grid denominator must be >= 48", "grid");
    }
    const Rational n(grid_denominator);
    const Integer first = rat_floor(n / Rational(6)) + 1;
    const Integer last = rat_floor(Rational(5) * n / Rational(6));
    CuspRatioOptimum best{Rational(first, grid_denominator), cusp_ratio(Rational(first, grid_denominator))};
    for (Integer j = first + 1; j <= last; ++j) {
        const Rational alpha(j, grid_denominator);
        Rational f = cusp_ratio(alpha);
        if (f < best.ratio_star) {
            best = {alpha, std::move(f)};
        }
    }
    return best;
}

bool canonical_degree_applicable(const Integer& c1_sq, const Integer& c2, bool ordinary) {
    return ordinary ? c1_sq > c2 : c1_sq > 2 * c2;
}

Rational canonical_degree_bound(const Integer& c1_sq, const Integer& c2, const Integer& genus, bool ordinary) {
    if (genus < 0) {
        throw InvalidInput("genus must be nonnegative", "genus");
    }
    if (!ordinary) {
        if (c1_sq <= 2 * c2) {
            throw InvalidInput("needs c1^2 > 2 c2", "c1_sq");
        }
        Integer extra = 6 * (genus - 1) * c2;
        if (extra < 0) {
            extra = 0;
        }
        return Rational(Integer((3 * c2 - c1_sq) * (c1_sq + c2) + extra), Integer(c1_sq - 2 * c2));
    }
    if (c1_sq <= c2) {
        throw InvalidInput("needs c1^2 > c2", "c1_sq");
    }
    Integer extra = 4 * genus - 4;
    if (extra < 0) {
        extra = 0;
    }
    return Rational(Integer(3 * c2 - c1_sq + extra), Integer(c1_sq - c2)) * Rational(c1_sq);
}

PlaneCurveReport check_plane_curve_inequality(const Integer& c1_sq, const Integer& c2, const Rational& alpha,
                                   const Integer& k_dot_c, const Integer& c_sq,
                                   const std::vector<CurvePointData>& points) {
    PlaneCurveReport r;
    r.lhs = Rational(0);
    for (const auto& p : points) {
        if (p.mu < 1) {
            throw InvalidInput("Milnor number of a singular point is positive", "points");
        }
        r.lhs += Rational(3) * (alpha * Rational(Integer(p.mu - 1)) + Rational(1) - p.e_orb);
    }
    r.rhs = Rational(Integer(3 * c2 - c1_sq)) + alpha * Rational(k_dot_c) +
            (Rational(3) * alpha - alpha * alpha) * Rational(c_sq);
    r.slack = r.rhs - r.lhs;
    r.holds = r.lhs <= r.rhs;
    r.equality = r.lhs == r.rhs;
    return r;
}

}  // namespace orbeuler
