#include "orbeuler/ratkit.hpp"

#include <cctype>
#include <cstdio>

namespace orbeuler {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw InvalidInput("zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) {
        throw std::domain_error("division by zero");
    }
    return Rational::from_mpq(a.v_ / b.v_);
}

std::string Rational::str() const {
    if (is_integer()) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const std::string original(text);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw InvalidInput("not a rational literal: '" + original + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw InvalidInput("zero denominator in '" + original + "'");
    }
    if (negative) {
        n = -n;
    }
    return Rational(n, d);
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Integer rat_ceil(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.mpq().get_num_mpz_t(), x.mpq().get_den_mpz_t());
    return q;
}

Integer rat_floor(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.mpq().get_num_mpz_t(), x.mpq().get_den_mpz_t());
    return q;
}

std::string decimal7(const Rational& x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.7g", x.approx());
    return buf;
}

ChainDescriptor ChainDescriptor::make(const Integer& n, const Integer& q) {
    if (n < 1) {
        throw InvalidInput("chain descriptor needs n >= 1, got n=" + n.get_str());
    }
    if (q < 0 || q >= n) {
        throw InvalidInput("chain descriptor needs 0 <= q < n, got <" + n.get_str() + "," + q.get_str() + ">");
    }
    if (gcd(n, q) != 1) {
        throw InvalidInput("chain descriptor needs gcd(n,q) = 1, got <" + n.get_str() + "," + q.get_str() + ">");
    }
    return ChainDescriptor(n, q, false);
}

ChainDescriptor ChainDescriptor::single_minus_one_curve() { return ChainDescriptor(1, 1, true); }

std::string ChainDescriptor::str() const {
    return "<" + n_.get_str() + "," + q_.get_str() + ">";
}

std::vector<Integer> hj_expand(const ChainDescriptor& chain) {
    if (chain.is_minus_one_curve()) {
        throw InvalidInput("the <1,1> token has no continued-fraction expansion");
    }
    std::vector<Integer> bs;
    Integer n = chain.n();
    Integer q = chain.q();
    while (q != 0) {
        Integer b;
        mpz_cdiv_q(b.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
        bs.push_back(b);
        Integer next = b * q - n;
        n = q;
        q = next;
    }
    return bs;
}

std::vector<Integer> hj_expand(const Integer& n, const Integer& q) {
    return hj_expand(ChainDescriptor::make(n, q));
}

ChainDescriptor hj_chain(const std::vector<Integer>& bs) {
    for (const auto& b : bs) {
        if (b < 2) {
            throw InvalidInput("continued-fraction entries must be >= 2, got " + b.get_str());
        }
    }
    // Fold from the tail: n/q = b - 1/(n'/q') = (b n' - q')/n'.
    Integer n = 1;
    Integer q = 0;
    for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
        Integer next_n = *it * n - q;
        q = n;
        n = next_n;
    }
    return ChainDescriptor::make(n, q);
}

std::optional<Rational> hj_eval(const std::vector<Integer>& bs) {
    const ChainDescriptor c = hj_chain(bs);
    if (c.is_empty()) {
        return std::nullopt;
    }
    return Rational(c.n(), c.q());
}

}  // namespace orbeuler
