#include "orbeuler/localsing.hpp"

#include <algorithm>

namespace orbeuler {

const char* to_string(Exactness k) { return k == Exactness::Exact ? "exact" : "upper-bound"; }
const char* to_string(LcStatus s) { return s == LcStatus::LC ? "lc" : "not-lc"; }

namespace {

void check_unit_interval(const Rational& x, const std::string& what) {
    if (x < Rational(0) || x > Rational(1)) {
        throw InvalidInput("coefficient " + x.str() + " outside [0,1]", what);
    }
}

struct Validator {
    void operator()(const Ordinary& o) const {
        if (o.coeffs.empty()) {
            throw InvalidInput("ordinary point needs at least one branch", "coeffs");
        }
        for (const auto& c : o.coeffs) {
            check_unit_interval(c, "coeffs");
        }
    }
    void operator()(const CyclicQuotient& c) const {
        if (c.chain.is_minus_one_curve()) {
            throw InvalidInput("cyclic quotient chain cannot be the <1,1> token", "n");
        }
        check_unit_interval(c.d1, "d1");
        check_unit_interval(c.d2, "d2");
    }
    void operator()(const StarQuotient& s) const {
        if (s.b < 1) {
            throw InvalidInput("central curve needs b >= 1", "b");
        }
        for (const auto& arm : s.arms) {
            ChainDescriptor::make(arm.n, arm.q);
            check_unit_interval(arm.d, "arms");
        }
    }
    void operator()(const ReducedGerm& g) const {
        if (g.tau < 0 || g.mu < 0) {
            throw InvalidInput("mu and tau must be nonnegative", "mu");
        }
        if (g.mu < g.tau) {
            throw InvalidInput("mu < tau is impossible for a reduced curve germ", "tau");
        }
    }
};

}  // namespace

void validate(const LocalSingularity& s) { std::visit(Validator{}, s); }

StarInvariants star_invariants(const StarQuotient& s) {
    StarInvariants inv{Rational(s.b), Rational(0), Rational(1)};
    for (std::size_t i = 0; i < s.arms.size(); ++i) {
        const auto& arm = s.arms[i];
        inv.b0 -= Rational(arm.q, arm.n);
        const Rational weight = (Rational(1) - arm.d) / Rational(arm.n);
        inv.alpha += weight;
        inv.beta = i == 0 ? weight : min(inv.beta, weight);
    }
    return inv;
}

bool is_polyhedral_triple(std::array<Integer, 3> p) {
    std::sort(p.begin(), p.end());
    if (p[0] != 2) {
        return false;
    }
    if (p[1] == 2) {
        return p[2] >= 2;
    }
    return p[1] == 3 && p[2] >= 3 && p[2] <= 5;
}

StarValidation validate_star(const StarQuotient& s) {
    validate(LocalSingularity{s});
    StarValidation out;
    out.invariants = star_invariants(s);
    if (out.invariants.b0.sign() <= 0) {
        throw NotQuotient("b0 = " + out.invariants.b0.str() + " <= 0: not a quotient resolution graph");
    }
    constexpr int kMaxMultiplier = 60;
    for (int m1 = 1; m1 <= kMaxMultiplier; ++m1) {
        for (int m2 = 1; m2 <= kMaxMultiplier; ++m2) {
            for (int m3 = 1; m3 <= kMaxMultiplier; ++m3) {
                std::array<Integer, 3> p{s.arms[0].n * m1, s.arms[1].n * m2, s.arms[2].n * m3};
                if (is_polyhedral_triple(p)) {
                    std::sort(p.begin(), p.end());
                    out.assignment = {{Integer(m1), Integer(m2), Integer(m3)}, p};
                    return out;
                }
            }
        }
    }
    throw NotQuotient("no polyhedral triple (n_i m_i) for arms " + s.arms[0].n.get_str() + "," +
                      s.arms[1].n.get_str() + "," + s.arms[2].n.get_str());
}

CoverDegreeRecord cover_degree(const Rational& b0, const std::array<Integer, 3>& p) {
    if (b0.sign() <= 0) {
        throw InvalidInput("b0 must be positive", "b0");
    }
    Rational inverse_sum(0);
    for (const auto& pi : p) {
        if (pi < 1) {
            throw InvalidInput("triple entries must be positive", "p");
        }
        inverse_sum += Rational(Integer(1), pi);
    }
    if (inverse_sum <= Rational(1)) {
        throw InvalidInput("triple is not spherical (sum 1/p_i <= 1)", "p");
    }
    const Rational s = Rational(1) / (inverse_sum - Rational(1));
    return {s, Rational(4) * s * s * b0, p};
}

LcStatus lc_status(const LocalSingularity& s) {
    validate(s);
    if (const auto* o = std::get_if<Ordinary>(&s)) {
        Rational a(0);
        for (const auto& c : o->coeffs) {
            a += c;
        }
        return a <= Rational(2) ? LcStatus::LC : LcStatus::NotLC;
    }
    if (const auto* st = std::get_if<StarQuotient>(&s)) {
        return star_invariants(*st).alpha >= Rational(1) ? LcStatus::LC : LcStatus::NotLC;
    }
    return LcStatus::LC;
}

EulerValue euler_ordinary(const std::vector<Rational>& coeffs) {
    validate(LocalSingularity{Ordinary{coeffs}});
    const Rational a_max = *std::max_element(coeffs.begin(), coeffs.end());
    Rational a(0);
    std::size_t branches_in_boundary = 0;
    for (const auto& c : coeffs) {
        a += c;
        if (c.sign() > 0) {
            ++branches_in_boundary;
        }
    }
    if (a > Rational(2)) {
        return {Rational(0), Exactness::Exact, LcStatus::NotLC};
    }
    if (Rational(2) * a_max >= a) {
        return {(Rational(1) - a + a_max) * (Rational(1) - a_max), Exactness::Exact, LcStatus::LC};
    }
    const Rational half_defect = Rational(1) - a / Rational(2);
    // Zero-coefficient lines are not part of the boundary; only the lines that
    // are decide whether the three-line formula applies.
    const Exactness kind = branches_in_boundary <= 3 ? Exactness::Exact : Exactness::UpperBound;
    return {half_defect * half_defect, kind, LcStatus::LC};
}

EulerValue euler_cyclic(const ChainDescriptor& chain, const Rational& d1, const Rational& d2) {
    validate(LocalSingularity{CyclicQuotient{chain, d1, d2}});
    return {(Rational(1) - d1) * (Rational(1) - d2) / Rational(chain.n()), Exactness::Exact, LcStatus::LC};
}

EulerValue euler_star(const StarQuotient& s) {
    const auto [inv, assignment] = validate_star(s);
    const auto& [b0, alpha, beta] = inv;
    if (alpha < Rational(1)) {
        return {Rational(0), Exactness::Exact, LcStatus::NotLC};
    }
    const Rational excess = alpha - Rational(1);
    if (alpha < Rational(2) * beta + Rational(1)) {
        return {excess * excess / (Rational(4) * b0), Exactness::Exact, LcStatus::LC};
    }
    return {(excess - beta) * beta / b0, Exactness::Exact, LcStatus::LC};
}

EulerValue euler_local(const LocalSingularity& s) {
    struct Dispatch {
        EulerValue operator()(const Ordinary& o) const { return euler_ordinary(o.coeffs); }
        EulerValue operator()(const CyclicQuotient& c) const { return euler_cyclic(c.chain, c.d1, c.d2); }
        EulerValue operator()(const StarQuotient& st) const { return euler_star(st); }
        EulerValue operator()(const ReducedGerm& g) const {
            validate(LocalSingularity{g});
            return {Rational(Integer(g.mu - g.tau)), Exactness::Exact, LcStatus::LC};
        }
    };
    return std::visit(Dispatch{}, s);
}

SbarRecord sbar_record(const Integer& n, const std::array<Integer, 3>& l) {
    if (n < 2) {
        throw InvalidInput("covering degree n must be >= 2", "n");
    }
    for (const auto& li : l) {
        if (li < 1 || li > n - 1) {
            throw InvalidInput("l_i must satisfy 1 <= l_i <= n-1, got " + li.get_str(), "l");
        }
    }
    SbarRecord r;
    r.n = n;
    r.l = l;
    r.e = n - l[0] - l[1] - l[2];
    r.p = r.e;
    for (const auto& li : l) {
        if (-li > r.p) {
            r.p = -li;
        }
    }
    r.sbar = max(Rational(r.p), Rational(r.e, Integer(2)));
    r.value = r.sbar * (Rational(r.e) - r.sbar) / Rational(Integer(n * n));
    return r;
}

Rational sbar_oracle(const Integer& n, const Integer& l1, const Integer& l2, const Integer& l3) {
    return sbar_record(n, {l1, l2, l3}).value;
}

}  // namespace orbeuler
