#pragma once

// Pair descriptions shared by the unit and acceptance suites.

#include <string>
#include <vector>

#include "orbeuler/pairspace.hpp"

namespace fixtures {

using namespace orbeuler;

inline ComponentData plane_curve(std::string id, Rational a, long degree, long genus = 0) {
    ComponentData c;
    c.id = std::move(id);
    c.a = std::move(a);
    c.degree = Integer(degree);
    c.genus = genus;
    return c;
}

/// The arrangement (x^m - y^m)(y^m - z^m)(z^m - x^m) = 0 with every line at
/// coefficient a. Lines x = w^i y, y = w^j z, z = w^k x meet three at a time
/// when i + j + k = 0 mod m; the m lines of each family meet at a coordinate
/// point. For m = 2 the coordinate points are nodes.
inline PairDescription fermat_pair(int m, const Rational& a) {
    PairDescription p;
    auto id = [](char family, int i) { return std::string(1, family) + std::to_string(i); };
    for (char family : {'X', 'Y', 'Z'}) {
        for (int i = 0; i < m; ++i) {
            p.components.push_back(plane_curve(id(family, i), a, 1));
        }
    }
    int next = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const int k = ((-(i + j)) % m + m) % m;
            SingularPointData pt;
            pt.id = "T" + std::to_string(next++);
            pt.local = Ordinary{{a, a, a}};
            pt.incident = {{id('X', i), 1}, {id('Y', j), 1}, {id('Z', k), 1}};
            p.points.push_back(std::move(pt));
        }
    }
    for (char family : {'X', 'Y', 'Z'}) {
        SingularPointData pt;
        pt.id = std::string("P") + family;
        pt.local = Ordinary{std::vector<Rational>(static_cast<std::size_t>(m), a)};
        for (int i = 0; i < m; ++i) {
            pt.incident.push_back({id(family, i), 1});
        }
        p.points.push_back(std::move(pt));
    }
    return p;
}

/// k lines in general position, all at coefficient a.
inline PairDescription general_lines(int k, const Rational& a) {
    PairDescription p;
    for (int i = 0; i < k; ++i) {
        p.components.push_back(plane_curve("L" + std::to_string(i), a, 1));
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            SingularPointData pt;
            pt.id = "N" + std::to_string(i) + "_" + std::to_string(j);
            pt.local = Ordinary{{a, a}};
            pt.incident = {{"L" + std::to_string(i), 1}, {"L" + std::to_string(j), 1}};
            p.points.push_back(std::move(pt));
        }
    }
    return p;
}

/// Three lines through one point.
inline PairDescription concurrent_lines(const Rational& a) {
    PairDescription p;
    for (int i = 0; i < 3; ++i) {
        p.components.push_back(plane_curve("L" + std::to_string(i), a, 1));
    }
    SingularPointData pt;
    pt.id = "O";
    pt.local = Ordinary{{a, a, a}};
    pt.incident = {{"L0", 1}, {"L1", 1}, {"L2", 1}};
    p.points.push_back(pt);
    return p;
}

inline PairDescription smooth_plane_curve(long degree, const Rational& a) {
    PairDescription p;
    p.components.push_back(plane_curve("C", a, degree, (degree - 1) * (degree - 2) / 2));
    return p;
}

inline PairDescription nodal_cubic(const Rational& a) {
    PairDescription p;
    p.components.push_back(plane_curve("C", a, 3, 0));
    SingularPointData node;
    node.id = "node";
    node.local = Ordinary{{a, a}};
    node.incident = {{"C", 2}};
    p.points.push_back(node);
    return p;
}

/// Cuspidal cubic with coefficient 1; the cusp is given by mu = tau = 2.
inline PairDescription cuspidal_cubic() {
    PairDescription p;
    p.components.push_back(plane_curve("C", Rational(1), 3, 0));
    SingularPointData cusp;
    cusp.id = "cusp";
    cusp.local = ReducedGerm{2, 2};
    cusp.incident = {{"C", 1}};
    cusp.m_P = Rational(2);
    p.points.push_back(cusp);
    return p;
}

inline StarQuotient cusp_star(const Rational& alpha) {
    return StarQuotient{Integer(1), {StarArm{2, 1, Rational(0)}, StarArm{3, 1, Rational(0)}, StarArm{1, 0, alpha}}};
}

/// Sextic of genus 1 with nine ordinary cusps (dual of a smooth cubic), at
/// coefficient alpha.
inline PairDescription nine_cusped_sextic(const Rational& alpha) {
    PairDescription p;
    p.components.push_back(plane_curve("C", alpha, 6, 1));
    for (int i = 0; i < 9; ++i) {
        SingularPointData cusp;
        cusp.id = "cusp" + std::to_string(i);
        cusp.local = cusp_star(alpha);
        cusp.incident = {{"C", 1}};
        cusp.m_P = Rational(2) * alpha;
        p.points.push_back(cusp);
    }
    return p;
}

/// P^1 x P^1 with two fibres and two sections, all at coefficient a.
inline PairDescription quadric_square(const Rational& a, bool effective) {
    PairDescription p;
    p.surface = {SurfaceMode::Generic, Integer(4), Integer(8)};
    p.effective = effective;
    const std::vector<std::string> fibres = {"F0", "F1"};
    const std::vector<std::string> sections = {"S0", "S1"};
    for (const auto& f : fibres) {
        ComponentData c;
        c.id = f;
        c.a = a;
        c.pairings = {{"K", Integer(-2)}, {"F0", Integer(0)}, {"F1", Integer(0)}, {"S0", Integer(1)}, {"S1", Integer(1)}};
        p.components.push_back(c);
    }
    for (const auto& s : sections) {
        ComponentData c;
        c.id = s;
        c.a = a;
        c.pairings = {{"K", Integer(-2)}, {"S0", Integer(0)}, {"S1", Integer(0)}};
        p.components.push_back(c);
    }
    for (const auto& f : fibres) {
        for (const auto& s : sections) {
            SingularPointData pt;
            pt.id = f + s;
            pt.local = Ordinary{{a, a}};
            pt.incident = {{f, 1}, {s, 1}};
            p.points.push_back(pt);
        }
    }
    return p;
}

/// Pairs that are log canonical with K+D effective (up to a multiple); the
/// inequality must never be violated on any of them.
inline std::vector<std::pair<std::string, PairDescription>> lc_effective_corpus() {
    std::vector<std::pair<std::string, PairDescription>> out;
    for (int m : {2, 3, 4}) {
        for (const Rational& a : {Rational(1, m), Rational(1, 2), Rational(2, 3)}) {
            if (a * Rational(m) <= Rational(2)) {
                out.emplace_back("fermat m=" + std::to_string(m) + " a=" + a.str(), fermat_pair(m, a));
            }
        }
    }
    for (int k : {3, 4, 5, 6, 8}) {
        for (const Rational& a : {Rational(1), Rational(3, 4), Rational(1, 2)}) {
            if (a * Rational(k) >= Rational(3)) {
                out.emplace_back("general lines k=" + std::to_string(k) + " a=" + a.str(), general_lines(k, a));
            }
        }
    }
    for (long d : {3, 4, 5, 6}) {
        out.emplace_back("smooth degree " + std::to_string(d), smooth_plane_curve(d, Rational(1)));
    }
    out.emplace_back("smooth sextic a=1/2", smooth_plane_curve(6, Rational(1, 2)));
    out.emplace_back("nodal cubic", nodal_cubic(Rational(1)));
    out.emplace_back("cuspidal cubic", cuspidal_cubic());
    out.emplace_back("nine-cusped sextic a=1/2", nine_cusped_sextic(Rational(1, 2)));
    out.emplace_back("nine-cusped sextic a=2/3", nine_cusped_sextic(Rational(2, 3)));
    out.emplace_back("nine-cusped sextic a=5/6", nine_cusped_sextic(Rational(5, 6)));
    out.emplace_back("quadric square a=1", quadric_square(Rational(1), true));
    return out;
}

}  // namespace fixtures
