#include "orbeuler/germlab.hpp"

#include <algorithm>
#include <cctype>

namespace orbeuler {

CurveGerm::CurveGerm(const std::vector<GermTerm>& terms) {
    for (const auto& t : terms) {
        terms_[{t.i, t.j}] += t.coeff;
    }
    std::erase_if(terms_, [](const auto& kv) { return kv.second.sign() == 0; });
    if (terms_.empty()) {
        throw InvalidInput("germ is identically zero", "terms");
    }
    if (terms_.contains({0, 0})) {
        throw InvalidInput("germ has a constant term, so it does not pass through the origin", "terms");
    }
}

unsigned CurveGerm::order() const {
    unsigned best = ~0u;
    for (const auto& [e, c] : terms_) {
        best = std::min(best, e.first + e.second);
    }
    return best;
}

std::string CurveGerm::str() const {
    std::string out;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        const Rational mag = abs(c);
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        auto append_var = [&mono](char v, unsigned p) {
            if (p == 0) {
                return;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += v;
            if (p > 1) {
                mono += '^' + std::to_string(p);
            }
        };
        append_var('x', e.first);
        append_var('y', e.second);
        if (mag != Rational(1)) {
            out += mag.str() + "*";
        }
        out += mono;
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    std::vector<GermTerm> run() {
        std::vector<GermTerm> terms;
        skip_ws();
        if (at_end()) {
            fail("empty polynomial");
        }
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            bool had_sign = false;
            while (true) {
                skip_ws();
                if (consume('+')) {
                    had_sign = true;
                } else if (consume('-') || consume_unicode_minus()) {
                    sign = -sign;
                    had_sign = true;
                } else {
                    break;
                }
            }
            if (!first && !had_sign) {
                fail("expected '+' or '-'");
            }
            first = false;
            GermTerm t = term();
            if (sign < 0) {
                t.coeff = -t.coeff;
            }
            terms.push_back(std::move(t));
            skip_ws();
        }
        return terms;
    }

private:
    GermTerm term() {
        GermTerm t{0, 0, Rational(1)};
        bool any = false;
        skip_ws();
        if (peek_digit()) {
            Integer num = digits();
            Integer den = 1;
            skip_ws();
            if (consume('/')) {
                skip_ws();
                if (!peek_digit()) {
                    fail("expected denominator");
                }
                den = digits();
                if (den == 0) {
                    fail("zero denominator");
                }
            }
            t.coeff = Rational(num, den);
            any = true;
        }
        while (true) {
            skip_ws();
            const std::size_t save = pos_;
            const bool star = consume('*');
            skip_ws();
            if (at_end() || (s_[pos_] != 'x' && s_[pos_] != 'y')) {
                if (star) {
                    pos_ = save;
                    fail("expected x or y after '*'");
                }
                break;
            }
            const char var = s_[pos_++];
            unsigned power = 1;
            skip_ws();
            if (consume('^')) {
                skip_ws();
                if (!peek_digit()) {
                    fail("expected exponent after '^'");
                }
                power = static_cast<unsigned>(digits().get_ui());
            }
            (var == 'x' ? t.i : t.j) += power;
            any = true;
        }
        if (!any) {
            fail("expected a coefficient or a monomial in x, y");
        }
        return t;
    }

    Integer digits() {
        std::string buf;
        while (peek_digit()) {
            buf += s_[pos_++];
        }
        if (buf.size() > 1000) {
            fail("number too long");
        }
        return Integer(buf, 10);
    }

    bool at_end() const { return pos_ >= s_.size(); }
    bool peek_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }
    bool consume(char c) {
        if (!at_end() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool consume_unicode_minus() {
        static constexpr std::string_view kMinus = "\xE2\x88\x92";
        if (s_.substr(pos_, kMinus.size()) == kMinus) {
            pos_ += kMinus.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidInput(why + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'",
                           "polynomial");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// row -= factor * pivot, both sorted by column.
SparseRow axpy(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t a = 0;
    std::size_t b = 0;
    while (a < row.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
            out.push_back(row[a++]);
        } else if (a == row.size() || pivot[b].first < row[a].first) {
            out.emplace_back(pivot[b].first, -(factor * pivot[b].second));
            ++b;
        } else {
            Rational v = row[a].second - factor * pivot[b].second;
            if (v.sign() != 0) {
                out.emplace_back(row[a].first, std::move(v));
            }
            ++a;
            ++b;
        }
    }
    return out;
}

// Column index of x^i y^j among monomials ordered by total degree, then by i.
std::size_t monomial_index(unsigned i, unsigned j) {
    const std::size_t d = i + j;
    return d * (d + 1) / 2 + i;
}

}  // namespace

CurveGerm CurveGerm::parse(std::string_view text) { return CurveGerm(PolyParser(text).run()); }

Polynomial derivative_x(const Polynomial& f) {
    Polynomial out;
    for (const auto& [e, c] : f) {
        if (e.first > 0) {
            out[{e.first - 1, e.second}] = c * Rational(static_cast<long>(e.first));
        }
    }
    return out;
}

Polynomial derivative_y(const Polynomial& f) {
    Polynomial out;
    for (const auto& [e, c] : f) {
        if (e.second > 0) {
            out[{e.first, e.second - 1}] = c * Rational(static_cast<long>(e.second));
        }
    }
    return out;
}

std::size_t truncated_dimension(const std::vector<Polynomial>& generators, unsigned truncation) {
    const std::size_t columns = static_cast<std::size_t>(truncation) * (truncation + 1) / 2;
    // pivots[c] is a row whose first column is c, normalized to leading coefficient 1.
    std::vector<SparseRow> pivots(columns);
    std::size_t rank = 0;
    for (const auto& g : generators) {
        if (g.empty()) {
            continue;
        }
        for (unsigned deg = 0; deg < truncation; ++deg) {
            for (unsigned a = 0; a <= deg; ++a) {
                const unsigned b = deg - a;
                SparseRow row;
                for (const auto& [e, c] : g) {
                    const unsigned i = e.first + a;
                    const unsigned j = e.second + b;
                    if (i + j < truncation) {
                        row.emplace_back(monomial_index(i, j), c);
                    }
                }
                std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
                while (!row.empty()) {
                    const std::size_t lead = row.front().first;
                    if (pivots[lead].empty()) {
                        const Rational inv = Rational(1) / row.front().second;
                        for (auto& [col, v] : row) {
                            v *= inv;
                        }
                        pivots[lead] = std::move(row);
                        ++rank;
                        break;
                    }
                    row = axpy(row, row.front().second, pivots[lead]);
                }
                if (rank == columns) {
                    return 0;
                }
            }
        }
    }
    return columns - rank;
}

LocalDimension local_algebra_dimension(const std::vector<Polynomial>& generators, unsigned cap) {
    if (cap < 2) {
        throw InvalidInput("truncation cap must be >= 2", "cap");
    }
    std::size_t previous = truncated_dimension(generators, 1);
    for (unsigned n = 1; n + 1 <= cap; ++n) {
        const std::size_t next = truncated_dimension(generators, n + 1);
        if (next == previous) {
            return {previous, n};
        }
        previous = next;
    }
    throw NotIsolated("local algebra dimension did not stabilize by truncation " + std::to_string(cap) +
                      " (non-isolated singularity or cap too small)");
}

namespace {

bool smooth_at_origin(const CurveGerm& f) { return f.order() == 1; }

}  // namespace

std::size_t milnor_number(const CurveGerm& f, unsigned cap) {
    if (smooth_at_origin(f)) {
        return 0;
    }
    return local_algebra_dimension({derivative_x(f.terms()), derivative_y(f.terms())}, cap).dim;
}

std::size_t tjurina_number(const CurveGerm& f, unsigned cap) {
    if (smooth_at_origin(f)) {
        return 0;
    }
    return local_algebra_dimension({f.terms(), derivative_x(f.terms()), derivative_y(f.terms())}, cap).dim;
}

GermInvariants germ_invariants(const CurveGerm& f, unsigned cap) {
    if (smooth_at_origin(f)) {
        return {0, 0, 1};
    }
    const auto fx = derivative_x(f.terms());
    const auto fy = derivative_y(f.terms());
    const LocalDimension mu = local_algebra_dimension({fx, fy}, cap);
    const LocalDimension tau = local_algebra_dimension({f.terms(), fx, fy}, cap);
    return {mu.dim, tau.dim, std::max(mu.truncation_used, tau.truncation_used)};
}

std::size_t euler_reduced_germ(const CurveGerm& f, unsigned cap) {
    const GermInvariants inv = germ_invariants(f, cap);
    return inv.mu - inv.tau;
}

Integer log_chern_c2(const Integer& c2_surface, const Integer& kd_dot_d, const std::vector<Integer>& taus) {
    Integer out = c2_surface + kd_dot_d;
    for (const auto& t : taus) {
        out -= t;
    }
    return out;
}

Integer euler_top_complement(const Integer& c2_surface, const Integer& kd_dot_d, const std::vector<Integer>& mus) {
    Integer out = c2_surface + kd_dot_d;
    for (const auto& m : mus) {
        out -= m;
    }
    return out;
}

const char* to_string(LctVerdict v) { return v == LctVerdict::LctFails ? "LCT-fails" : "no-obstruction"; }

LctReport lct_obstruction(const std::vector<std::pair<Integer, Integer>>& mu_tau) {
    LctReport r{Integer(0), LctVerdict::NoObstruction};
    for (const auto& [mu, tau] : mu_tau) {
        if (mu < tau) {
            throw InvalidInput("mu < tau (" + mu.get_str() + " < " + tau.get_str() + ")", "mu_tau");
        }
        r.obstruction += mu - tau;
    }
    if (r.obstruction > 0) {
        r.verdict = LctVerdict::LctFails;
    }
    return r;
}

}  // namespace orbeuler
