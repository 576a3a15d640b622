#pragma once

// Global orbifold Euler numbers of projective surface pairs (X, D = sum a_i D_i)
// and the inequality checks built on them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbeuler/localsing.hpp"
#include "orbeuler/ratkit.hpp"

namespace orbeuler {

enum class SurfaceMode { Generic, Plane };

struct SurfaceData {
    SurfaceMode mode = SurfaceMode::Plane;
    Integer e_top = 3;
    Integer c1_sq = 9;

    static SurfaceData plane() { return {}; }
};

struct ComponentData {
    std::string id;
    Rational a;
    Integer genus = 0;
    // Plane mode.
    std::optional<Integer> degree;
    // Generic mode: "K" -> K.D_i, other component ids -> D_i.D_j (self included).
    std::map<std::string, Integer> pairings;
};

struct Incidence {
    std::string component;
    Integer branches = 1;
};

struct SingularPointData {
    std::string id;
    LocalSingularity local;
    std::vector<Incidence> incident;
    // Coefficient-weighted multiplicity of D at the point. Defaults to the
    // coefficient sum for ordinary points and to 0 for points off D.
    std::optional<Rational> m_P;
};

struct PairDescription {
    SurfaceData surface;
    std::vector<ComponentData> components;
    std::vector<SingularPointData> points;
    // User assertion that a multiple of K+D is effective (Generic mode only;
    // Plane mode decides it from degrees).
    bool effective = false;
};

/// Structural checks: unique ids, known component references, coefficients in
/// [0,1], plane data consistent, local specs valid. Returns warnings for
/// suspicious but accepted input.
std::vector<std::string> validate_pair(const PairDescription& pair);

/// 2 - 2g - sum (r - 1).
Integer euler_top_curve(const Integer& genus, const std::vector<Integer>& branch_counts);

/// e_top(X) - sum a_i (e_top(D_i) - #points on D_i) + sum_points (e_loc - 1).
EulerValue euler_orbifold_global(const PairDescription& pair);

/// (K + D)^2 by bilinear expansion.
Rational pair_kd_squared(const PairDescription& pair);

/// Whether a multiple of K+D is known effective: asserted in Generic mode,
/// sum a_i d_i >= 3 in Plane mode.
bool effectivity_holds(const PairDescription& pair);

enum class Verdict { Proved, ConsistentUpperBound, Violation, PreconditionFailed };
const char* to_string(Verdict v);

struct BmyReport {
    Rational lhs;  // 3 e_orb
    Exactness lhs_kind = Exactness::Exact;
    Rational rhs;  // (K+D)^2
    Verdict verdict = Verdict::PreconditionFailed;
    bool equality_flag = false;
    Rational slack;  // lhs - rhs
    EulerValue e_orb;
    std::vector<std::string> notes;
};

/// 3 e_orb(X,D) >= (K+D)^2 for lc pairs with K+D effective up to a multiple.
BmyReport check_bmy(const PairDescription& pair);

struct CurveBoundReport {
    Rational lhs;  // (K+D)^2
    Rational rhs;  // 3 (c2 + sum a_i (2g-2) + sum (r_P - m_P + m_P^2/4))
    Rational slack;  // rhs - lhs
    Verdict verdict = Verdict::PreconditionFailed;
    std::vector<std::string> notes;
};

/// Curve-genus form of the inequality with branch and multiplicity terms.
CurveBoundReport check_curve_bound(const PairDescription& pair);

struct BranchMultiplicity {
    Integer r;  // analytic branches
    Integer m;  // multiplicity
};

/// Largest K_X C allowed for an irreducible curve of geometric genus g on a
/// surface with K^2 = 3 c2 > 0: 3(g-1) + (3/2) sum (r_P - m_P).
Rational ball_quotient_curve_bound(const Integer& genus, const std::vector<BranchMultiplicity>& points);

}  // namespace orbeuler
