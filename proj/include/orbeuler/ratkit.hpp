#pragma once

// Exact rational arithmetic and Hirzebruch-Jung continued fractions.
//
// Rational is always kept in lowest terms with a positive denominator.
// Integers are arbitrary precision (GMP); nothing in this library overflows.

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace orbeuler {

using Integer = mpz_class;

/// Raised for malformed or out-of-domain input. `field()` names the offending
/// input field when known (empty otherwise).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what, std::string field = {})
        : std::invalid_argument(field.empty() ? what : field + ": " + what),
          field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return from_mpq(-v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    /// Only for human-readable annotations; never used in core computations.
    double approx() const { return v_.get_d(); }

    /// Parses "p/q" (optional sign on p) or a bare integer "p". Rejects q = 0.
    static Rational parse(std::string_view text);

    const mpq_class& mpq() const { return v_; }

private:
    static Rational from_mpq(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& x);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Least integer >= x.
Integer rat_ceil(const Rational& x);
/// Greatest integer <= x.
Integer rat_floor(const Rational& x);

/// Decimal annotation to seven significant digits, e.g. "0.06250000".
std::string decimal7(const Rational& x);

// --- Hirzebruch-Jung chains -------------------------------------------------

/// Chain type <n,q>: 0 <= q < n, gcd(n,q) = 1. (1,0) is the empty chain.
/// The <1,1> token (a single (-1)-curve) is a separate state and is never
/// passed to expansion.
class ChainDescriptor {
public:
    static ChainDescriptor make(const Integer& n, const Integer& q);
    static ChainDescriptor single_minus_one_curve();

    const Integer& n() const { return n_; }
    const Integer& q() const { return q_; }
    bool is_minus_one_curve() const { return minus_one_; }
    bool is_empty() const { return !minus_one_ && n_ == 1; }

    std::string str() const;

    friend bool operator==(const ChainDescriptor&, const ChainDescriptor&) = default;

private:
    ChainDescriptor(Integer n, Integer q, bool minus_one)
        : n_(std::move(n)), q_(std::move(q)), minus_one_(minus_one) {}

    Integer n_;
    Integer q_;
    bool minus_one_ = false;
};

/// Greedy ceiling expansion n/q = b1 - 1/(b2 - ...), every b_i >= 2.
/// Empty for (1,0).
std::vector<Integer> hj_expand(const Integer& n, const Integer& q);
std::vector<Integer> hj_expand(const ChainDescriptor& chain);

/// Value of the continued fraction; nullopt for the empty chain.
std::optional<Rational> hj_eval(const std::vector<Integer>& bs);

/// Same evaluation, reported as a chain type. The empty sequence gives (1,0).
ChainDescriptor hj_chain(const std::vector<Integer>& bs);

}  // namespace orbeuler
