#include "orbeuler/pairspace.hpp"

#include <algorithm>
#include <set>

namespace orbeuler {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Proved: return "proved";
        case Verdict::ConsistentUpperBound: return "consistent-upper-bound";
        case Verdict::Violation: return "violation";
        case Verdict::PreconditionFailed: return "precondition-failed";
    }
    return "?";
}

namespace {

std::map<std::string, const ComponentData*> index_components(const PairDescription& pair) {
    std::map<std::string, const ComponentData*> out;
    for (const auto& c : pair.components) {
        out[c.id] = &c;
    }
    return out;
}

Rational coefficient_sum(const std::vector<Rational>& xs) {
    Rational s(0);
    for (const auto& x : xs) {
        s += x;
    }
    return s;
}

// Whether the surface itself is smooth at the point: e_orb(x; X, 0) = 1.
bool surface_smooth_at(const LocalSingularity& local) {
    if (const auto* c = std::get_if<CyclicQuotient>(&local)) {
        return c->chain.n() == 1;
    }
    if (const auto* s = std::get_if<StarQuotient>(&local)) {
        StarQuotient bare = *s;
        for (auto& arm : bare.arms) {
            arm.d = Rational(0);
        }
        return euler_star(bare).value == Rational(1);
    }
    return true;
}

}  // namespace

std::vector<std::string> validate_pair(const PairDescription& pair) {
    std::vector<std::string> warnings;
    const bool plane = pair.surface.mode == SurfaceMode::Plane;
    if (plane && (pair.surface.e_top != 3 || pair.surface.c1_sq != 9)) {
        throw InvalidInput("plane mode fixes e_top = 3 and c1_sq = 9", "surface");
    }
    std::set<std::string> ids;
    for (std::size_t i = 0; i < pair.components.size(); ++i) {
        const auto& c = pair.components[i];
        const std::string where = "components[" + std::to_string(i) + "]";
        if (c.id.empty() || !ids.insert(c.id).second) {
            throw InvalidInput("component id empty or duplicated: '" + c.id + "'", where + ".id");
        }
        if (c.a < Rational(0) || c.a > Rational(1)) {
            throw InvalidInput("coefficient " + c.a.str() + " outside [0,1]", where + ".a");
        }
        if (c.genus < 0) {
            throw InvalidInput("genus must be nonnegative", where + ".genus");
        }
        if (plane && (!c.degree || *c.degree < 1)) {
            throw InvalidInput("plane mode needs a positive degree", where + ".degree");
        }
    }
    std::set<std::string> point_ids;
    for (std::size_t i = 0; i < pair.points.size(); ++i) {
        const auto& p = pair.points[i];
        const std::string where = "points[" + std::to_string(i) + "]";
        if (p.id.empty() || !point_ids.insert(p.id).second) {
            throw InvalidInput("point id empty or duplicated: '" + p.id + "'", where + ".id");
        }
        try {
            validate(p.local);
        } catch (const InvalidInput& e) {
            throw InvalidInput(e.what(), where + ".local");
        }
        std::set<std::string> seen;
        std::vector<Rational> branch_coeffs;
        for (const auto& inc : p.incident) {
            if (!ids.contains(inc.component)) {
                throw InvalidInput("unknown component '" + inc.component + "'", where + ".incident");
            }
            if (!seen.insert(inc.component).second) {
                throw InvalidInput("component '" + inc.component + "' listed twice", where + ".incident");
            }
            if (inc.branches < 1) {
                throw InvalidInput("branch count must be positive", where + ".incident");
            }
            const auto it = std::find_if(pair.components.begin(), pair.components.end(),
                                         [&](const ComponentData& c) { return c.id == inc.component; });
            for (Integer r = 0; r < inc.branches; ++r) {
                if (it->a.sign() > 0) {
                    branch_coeffs.push_back(it->a);
                }
            }
        }
        if (p.incident.empty()) {
            warnings.push_back("point '" + p.id + "' lies on no component");
        }
        if (const auto* o = std::get_if<Ordinary>(&p.local); o && !p.incident.empty()) {
            std::vector<Rational> local_coeffs;
            std::copy_if(o->coeffs.begin(), o->coeffs.end(), std::back_inserter(local_coeffs),
                         [](const Rational& c) { return c.sign() > 0; });
            std::sort(local_coeffs.begin(), local_coeffs.end());
            std::sort(branch_coeffs.begin(), branch_coeffs.end());
            if (local_coeffs != branch_coeffs) {
                throw InvalidInput("ordinary coefficients do not match the incident branches", where + ".local");
            }
        }
        if (p.m_P && p.m_P->sign() < 0) {
            throw InvalidInput("multiplicity must be nonnegative", where + ".m_P");
        }
    }
    return warnings;
}

Integer euler_top_curve(const Integer& genus, const std::vector<Integer>& branch_counts) {
    Integer e = 2 - 2 * genus;
    for (const auto& r : branch_counts) {
        e -= r - 1;
    }
    return e;
}

EulerValue euler_orbifold_global(const PairDescription& pair) {
    validate_pair(pair);
    EulerValue out{Rational(pair.surface.e_top), Exactness::Exact, LcStatus::LC};
    for (const auto& c : pair.components) {
        std::vector<Integer> branches;
        for (const auto& p : pair.points) {
            for (const auto& inc : p.incident) {
                if (inc.component == c.id) {
                    branches.push_back(inc.branches);
                }
            }
        }
        const Integer e_curve = euler_top_curve(c.genus, branches);
        const Integer removed = static_cast<long>(branches.size());
        out.value -= c.a * Rational(Integer(e_curve - removed));
    }
    for (const auto& p : pair.points) {
        const EulerValue local = euler_local(p.local);
        out.value += local.value - Rational(1);
        if (local.kind == Exactness::UpperBound) {
            out.kind = Exactness::UpperBound;
        }
        if (local.lc == LcStatus::NotLC) {
            out.lc = LcStatus::NotLC;
        }
    }
    return out;
}

namespace {

Integer self_or_mutual(const ComponentData& ci, const ComponentData& cj) {
    const auto a = ci.pairings.find(cj.id);
    const auto b = cj.pairings.find(ci.id);
    if (a != ci.pairings.end() && b != cj.pairings.end() && a->second != b->second) {
        throw InvalidInput("asymmetric pairing " + ci.id + "." + cj.id, "components.pairings");
    }
    if (a != ci.pairings.end()) {
        return a->second;
    }
    if (b != cj.pairings.end()) {
        return b->second;
    }
    throw InvalidInput("missing pairing " + ci.id + "." + cj.id, "components.pairings");
}

Rational weighted_degree(const PairDescription& pair) {
    Rational s(0);
    for (const auto& c : pair.components) {
        s += c.a * Rational(*c.degree);
    }
    return s;
}

}  // namespace

Rational pair_kd_squared(const PairDescription& pair) {
    validate_pair(pair);
    if (pair.surface.mode == SurfaceMode::Plane) {
        const Rational t = weighted_degree(pair) - Rational(3);
        return t * t;
    }
    Rational total(pair.surface.c1_sq);
    for (const auto& ci : pair.components) {
        if (ci.a.sign() == 0) {
            continue;
        }
        const auto k = ci.pairings.find("K");
        if (k == ci.pairings.end()) {
            throw InvalidInput("missing pairing K." + ci.id, "components.pairings");
        }
        total += Rational(2) * ci.a * Rational(k->second);
        for (const auto& cj : pair.components) {
            if (cj.a.sign() == 0) {
                continue;
            }
            total += ci.a * cj.a * Rational(self_or_mutual(ci, cj));
        }
    }
    return total;
}

bool effectivity_holds(const PairDescription& pair) {
    if (pair.surface.mode == SurfaceMode::Plane) {
        return weighted_degree(pair) >= Rational(3);
    }
    return pair.effective;
}

namespace {

// Empty when (X,D) is lc and a multiple of K+D is effective; otherwise the reasons.
std::vector<std::string> precondition_failures(const PairDescription& pair) {
    std::vector<std::string> why;
    for (const auto& p : pair.points) {
        if (lc_status(p.local) == LcStatus::NotLC) {
            why.push_back("pair is not log canonical at point '" + p.id + "'");
        }
    }
    if (!effectivity_holds(pair)) {
        why.push_back(pair.surface.mode == SurfaceMode::Plane
                          ? "K+D is not effective: weighted degree " + weighted_degree(pair).str() + " < 3"
                          : "effectivity of a multiple of K+D not asserted");
    }
    return why;
}

}  // namespace

BmyReport check_bmy(const PairDescription& pair) {
    BmyReport r;
    r.notes = validate_pair(pair);
    r.e_orb = euler_orbifold_global(pair);
    r.lhs = Rational(3) * r.e_orb.value;
    r.lhs_kind = r.e_orb.kind;
    r.rhs = pair_kd_squared(pair);
    r.slack = r.lhs - r.rhs;
    r.equality_flag = r.lhs_kind == Exactness::Exact && r.lhs == r.rhs;
    const auto failures = precondition_failures(pair);
    if (!failures.empty()) {
        r.verdict = Verdict::PreconditionFailed;
        r.notes.insert(r.notes.end(), failures.begin(), failures.end());
        return r;
    }
    if (r.lhs >= r.rhs) {
        r.verdict = r.lhs_kind == Exactness::Exact ? Verdict::Proved : Verdict::ConsistentUpperBound;
    } else {
        // An upper bound already below (K+D)^2 contradicts the inequality too.
        r.verdict = Verdict::Violation;
    }
    if (r.verdict == Verdict::Proved && r.equality_flag) {
        r.notes.push_back("equality: K+D is nef (asserted consequence, not computed)");
    }
    return r;
}

CurveBoundReport check_curve_bound(const PairDescription& pair) {
    CurveBoundReport r;
    r.notes = validate_pair(pair);
    const auto components = index_components(pair);
    r.lhs = pair_kd_squared(pair);
    Rational inner(pair.surface.e_top);
    for (const auto& c : pair.components) {
        inner += c.a * Rational(Integer(2 * c.genus - 2));
    }
    bool smooth_surface = true;
    for (std::size_t i = 0; i < pair.points.size(); ++i) {
        const auto& p = pair.points[i];
        Rational r_p(0);
        for (const auto& inc : p.incident) {
            r_p += components.at(inc.component)->a * Rational(inc.branches);
        }
        Rational m_p;
        if (p.m_P) {
            m_p = *p.m_P;
        } else if (const auto* o = std::get_if<Ordinary>(&p.local)) {
            m_p = coefficient_sum(o->coeffs);
        } else if (p.incident.empty()) {
            m_p = Rational(0);
        } else {
            throw InvalidInput("m_P is required for non-ordinary points", "points[" + std::to_string(i) + "].m_P");
        }
        inner += r_p - m_p + m_p * m_p / Rational(4);
        if (!surface_smooth_at(p.local)) {
            smooth_surface = false;
            r.notes.push_back("surface is singular at point '" + p.id + "'");
        }
    }
    r.rhs = Rational(3) * inner;
    r.slack = r.rhs - r.lhs;
    auto failures = precondition_failures(pair);
    if (!smooth_surface) {
        failures.push_back("the branch-multiplicity inequality needs a smooth surface");
    }
    if (!failures.empty()) {
        r.verdict = Verdict::PreconditionFailed;
        r.notes.insert(r.notes.end(), failures.begin(), failures.end());
        return r;
    }
    r.verdict = r.rhs >= r.lhs ? Verdict::Proved : Verdict::Violation;
    return r;
}

Rational ball_quotient_curve_bound(const Integer& genus, const std::vector<BranchMultiplicity>& points) {
    if (genus < 0) {
        throw InvalidInput("genus must be nonnegative", "genus");
    }
    Rational bound = Rational(3) * Rational(Integer(genus - 1));
    for (const auto& [r, m] : points) {
        if (r < 1 || m < 1) {
            throw InvalidInput("branch count and multiplicity must be positive", "points");
        }
        if (r > m) {
            throw InvalidInput("more branches (" + r.get_str() + ") than multiplicity (" + m.get_str() + ")", "points");
        }
        bound += Rational(3, 2) * Rational(Integer(r - m));
    }
    return bound;
}

}  // namespace orbeuler
