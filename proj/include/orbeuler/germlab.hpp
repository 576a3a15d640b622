#pragma once

// Milnor and Tjurina numbers of plane curve germs f(x,y) = 0 at the origin.
//
// The local dimension of O/I is read off from k[x,y]/(I + (x,y)^N): once
// dim(N) = dim(N+1), (x,y)^N lies in I + (x,y)^{N+1}, so by Nakayama it lies in
// I locally and the truncated count is the local one.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbeuler/ratkit.hpp"

namespace orbeuler {

/// No stabilization by the truncation cap: the singularity is not isolated
/// (or the cap is too small).
class NotIsolated : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr unsigned kDefaultGermCap = 30;

struct GermTerm {
    unsigned i = 0;  // power of x
    unsigned j = 0;  // power of y
    Rational coeff;
};

/// Polynomial with rational coefficients, no constant term, not zero.
class CurveGerm {
public:
    using Exponent = std::pair<unsigned, unsigned>;

    /// Like terms are combined; throws InvalidInput if the result is zero or
    /// has a constant term.
    explicit CurveGerm(const std::vector<GermTerm>& terms);

    /// Parses e.g. "x^4 + y^5 - 3/2*x^2*y^3" (also juxtaposition, "2x^2y").
    static CurveGerm parse(std::string_view text);

    const std::map<Exponent, Rational>& terms() const { return terms_; }
    unsigned order() const;
    std::string str() const;

private:
    CurveGerm() = default;
    std::map<Exponent, Rational> terms_;
};

using Polynomial = std::map<CurveGerm::Exponent, Rational>;

Polynomial derivative_x(const Polynomial& f);
Polynomial derivative_y(const Polynomial& f);

struct LocalDimension {
    std::size_t dim = 0;
    unsigned truncation_used = 0;
};

/// dim k[x,y]/(generators + (x,y)^N) for N = 1, 2, ... until two consecutive
/// truncations agree. Zero generators are ignored.
LocalDimension local_algebra_dimension(const std::vector<Polynomial>& generators, unsigned cap);

/// Dimension of k[x,y]/(generators + (x,y)^N) at one fixed N.
std::size_t truncated_dimension(const std::vector<Polynomial>& generators, unsigned truncation);

struct GermInvariants {
    std::size_t mu = 0;
    std::size_t tau = 0;
    unsigned truncation_used = 0;
};

std::size_t milnor_number(const CurveGerm& f, unsigned cap = kDefaultGermCap);
std::size_t tjurina_number(const CurveGerm& f, unsigned cap = kDefaultGermCap);
GermInvariants germ_invariants(const CurveGerm& f, unsigned cap = kDefaultGermCap);

/// Local orbifold Euler number of (C^2, C) for the reduced germ: mu - tau.
std::size_t euler_reduced_germ(const CurveGerm& f, unsigned cap = kDefaultGermCap);

/// c2 of the log cotangent sheaf: c2(X) + (K+D)D - sum tau.
Integer log_chern_c2(const Integer& c2_surface, const Integer& kd_dot_d, const std::vector<Integer>& taus);

/// e_top(X - D) = c2(X) + (K+D)D - sum mu.
Integer euler_top_complement(const Integer& c2_surface, const Integer& kd_dot_d, const std::vector<Integer>& mus);

enum class LctVerdict { NoObstruction, LctFails };
const char* to_string(LctVerdict v);

struct LctReport {
    Integer obstruction;
    LctVerdict verdict = LctVerdict::NoObstruction;
};

/// Sum of (mu - tau). Positive means some singularity is not weighted
/// homogeneous, so the logarithmic comparison theorem fails. Zero is only a
/// necessary condition.
LctReport lct_obstruction(const std::vector<std::pair<Integer, Integer>>& mu_tau);

}  // namespace orbeuler
