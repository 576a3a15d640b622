#pragma once

// Local orbifold Euler numbers of surface pair germs.
//
// Four germ classes are supported: an ordinary point (n smooth, pairwise
// transverse branches, n = 1 is a smooth point of the boundary), a cyclic
// quotient point with its two boundary branches, a quotient point whose
// minimal log resolution is star shaped with three arms, and a reduced curve
// germ with coefficient 1 given by its Milnor and Tjurina numbers.

#include <array>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "orbeuler/ratkit.hpp"

namespace orbeuler {

/// Star-shaped input that is not the resolution graph of a quotient point.
class NotQuotient : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Exactness { Exact, UpperBound };
enum class LcStatus { LC, NotLC };

const char* to_string(Exactness k);
const char* to_string(LcStatus s);

struct EulerValue {
    Rational value;
    Exactness kind = Exactness::Exact;
    LcStatus lc = LcStatus::LC;
};

struct Ordinary {
    std::vector<Rational> coeffs;
};

struct CyclicQuotient {
    ChainDescriptor chain = ChainDescriptor::make(1, 0);
    Rational d1;
    Rational d2;
};

struct StarArm {
    Integer n;
    Integer q;
    Rational d;
};

struct StarQuotient {
    Integer b;
    std::array<StarArm, 3> arms;
};

struct ReducedGerm {
    Integer mu;
    Integer tau;
};

using LocalSingularity = std::variant<Ordinary, CyclicQuotient, StarQuotient, ReducedGerm>;

/// Throws InvalidInput when a coefficient leaves [0,1], a chain is invalid,
/// an ordinary point has no branches, or mu < tau.
void validate(const LocalSingularity& s);

// --- star-shaped resolutions -----------------------------------------------

/// b0 = b - sum q_i/n_i, alpha = sum (1-d_i)/n_i, beta = min (1-d_i)/n_i.
struct StarInvariants {
    Rational b0;
    Rational alpha;
    Rational beta;
};

/// Polyhedral triple (sorted ascending) p_i = n_i m_i.
struct PolyhedralAssignment {
    std::array<Integer, 3> m;
    std::array<Integer, 3> triple;
};

struct StarValidation {
    StarInvariants invariants;
    PolyhedralAssignment assignment;
};

StarInvariants star_invariants(const StarQuotient& s);

/// True for (2,2,n), (2,3,3), (2,3,4), (2,3,5) after sorting.
bool is_polyhedral_triple(std::array<Integer, 3> p);

/// First (m1,m2,m3) in ascending lexicographic order, m_i <= 60, making
/// (n_i m_i) polyhedral. Throws NotQuotient if none exists or b0 <= 0.
StarValidation validate_star(const StarQuotient& s);

struct CoverDegreeRecord {
    Rational s;
    Rational degree;
    std::array<Integer, 3> triple;
};

/// Degree 4 s^2 b0 of the quotient map, 1 + 1/s = sum 1/p_i.
CoverDegreeRecord cover_degree(const Rational& b0, const std::array<Integer, 3>& p);

// --- evaluators --------------------------------------------------------------

LcStatus lc_status(const LocalSingularity& s);

EulerValue euler_ordinary(const std::vector<Rational>& coeffs);
EulerValue euler_cyclic(const ChainDescriptor& chain, const Rational& d1, const Rational& d2);
EulerValue euler_star(const StarQuotient& s);
EulerValue euler_local(const LocalSingularity& s);

// --- covering oracle for three lines ------------------------------------------

struct SbarRecord {
    Integer n;
    std::array<Integer, 3> l;
    Integer e;
    Integer p;
    Rational sbar;
    Rational value;
};

/// Three lines with coefficients 1 - l_i/n through the origin, evaluated via
/// the rank-2 bundle on the Fermat curve of degree n: e = n - sum l_i,
/// p = max(-l_i, e), sbar = max(p, e/2), value = sbar (e - sbar) / n^2.
/// Independent of euler_ordinary.
SbarRecord sbar_record(const Integer& n, const std::array<Integer, 3>& l);
Rational sbar_oracle(const Integer& n, const Integer& l1, const Integer& l2, const Integer& l3);

}  // namespace orbeuler
