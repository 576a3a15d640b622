#include "orbeuler/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "orbeuler/appbench.hpp"
#include "orbeuler/germlab.hpp"
#include "orbeuler/json_io.hpp"
#include "orbeuler/localsing.hpp"
#include "orbeuler/pairspace.hpp"

namespace orbeuler::cli {

using io::Json;

int exit_code_for(const std::string& verdict) {
    static const std::vector<std::string> ok = {"computed", "proved", "consistent-upper-bound", "holds"};
    static const std::vector<std::string> negative = {"violation", "hypothesis-not-met", "precondition-failed"};
    if (std::find(ok.begin(), ok.end(), verdict) != ok.end()) {
        return kOk;
    }
    if (std::find(negative.begin(), negative.end(), verdict) != negative.end()) {
        return kNegativeVerdict;
    }
    return kInvalidInput;
}

namespace {

struct Report {
    Report() = default;
    explicit Report(std::string cmd) : command(std::move(cmd)) {}

    std::string command;
    std::string verdict = "computed";
    Json values = Json::object();  // leaves are exact "p/q" strings
    Json labels = Json::object();
    std::vector<std::string> refs;
    std::vector<std::string> notes;
    std::vector<std::string> lines;

    void value(const std::string& key, const Rational& r, bool annotate = false) {
        values[key] = r.str();
        lines.push_back(key + " " + r.str() + (annotate && !r.is_integer() ? " (~" + decimal7(r) + ")" : ""));
    }
    void value(const std::string& key, const Integer& n) { value(key, Rational(n)); }
    void label(const std::string& key, const std::string& text) {
        labels[key] = text;
        lines.push_back(key + " " + text);
    }
};

void emit(const Report& r, bool machine, std::ostream& out) {
    if (machine) {
        Json j;
        j["command"] = r.command;
        j["verdict"] = r.verdict;
        j["values"] = r.values;
        j["labels"] = r.labels;
        j["refs"] = r.refs;
        j["notes"] = r.notes;
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& l : r.lines) {
        out << l << "\n";
    }
    for (const auto& n : r.notes) {
        out << "note: " << n << "\n";
    }
    if (r.verdict != "computed") {
        out << "verdict " << r.verdict << "\n";
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const InvalidInput& e) {
        throw InvalidInput(e.what(), flag);
    }
}

Integer parse_integer_flag(const std::string& text, const std::string& flag) {
    const Rational r = parse_rational_flag(text, flag);
    if (!r.is_integer()) {
        throw InvalidInput("expected an integer, got '" + text + "'", flag);
    }
    return r.numerator();
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& flag, std::size_t expected = 0) {
    std::vector<Rational> out;
    for (const auto& part : split(text, ',')) {
        out.push_back(parse_rational_flag(part, flag));
    }
    if (expected != 0 && out.size() != expected) {
        throw InvalidInput("expected " + std::to_string(expected) + " comma-separated values", flag);
    }
    return out;
}

std::string read_source(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot read file '" + path + "'", "--input");
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

// Exactly one input source must be given.
void require_one_source(const std::vector<std::pair<std::string, bool>>& sources) {
    std::vector<std::string> given;
    std::string names;
    for (const auto& [name, present] : sources) {
        names += (names.empty() ? "" : ", ") + name;
        if (present) {
            given.push_back(name);
        }
    }
    if (given.size() != 1) {
        std::string which;
        for (const auto& g : given) {
            which += (which.empty() ? "" : " and ") + g;
        }
        throw InvalidInput(given.empty() ? "no input: give one of " + names
                                         : "ambiguous input: " + which + " given together",
                           "input");
    }
}

struct DocumentSource {
    std::string input_path;
    std::string doc;

    bool present() const { return !input_path.empty() || !doc.empty(); }
    Json load() const {
        if (!input_path.empty()) {
            return io::parse_document(read_source(input_path), "--input");
        }
        return io::parse_document(doc, "--doc");
    }
};

void add_document_options(CLI::App* sub, DocumentSource& src) {
    sub->add_option("--input", src.input_path, "Input document (JSON file, '-' for stdin)");
    sub->add_option("--doc", src.doc, "Inline input document (JSON)");
}

// --- local -----------------------------------------------------------------------

struct LocalArgs {
    DocumentSource src;
    std::string ordinary;
    std::string cyclic;
    std::string star;
    std::string germ_mu_tau;
};

LocalSingularity local_from_args(const LocalArgs& a) {
    require_one_source({{"--input", !a.src.input_path.empty()},
                        {"--doc", !a.src.doc.empty()},
                        {"--ordinary", !a.ordinary.empty()},
                        {"--cyclic", !a.cyclic.empty()},
                        {"--star", !a.star.empty()},
                        {"--germ-mu-tau", !a.germ_mu_tau.empty()}});
    if (a.src.present()) {
        return io::local_from_json(a.src.load());
    }
    if (!a.ordinary.empty()) {
        return Ordinary{parse_rational_list(a.ordinary, "--ordinary")};
    }
    if (!a.cyclic.empty()) {
        const auto parts = split(a.cyclic, ',');
        if (parts.size() != 4) {
            throw InvalidInput("expected n,q,d1,d2", "--cyclic");
        }
        return CyclicQuotient{ChainDescriptor::make(parse_integer_flag(parts[0], "--cyclic"),
                                                    parse_integer_flag(parts[1], "--cyclic")),
                              parse_rational_flag(parts[2], "--cyclic"), parse_rational_flag(parts[3], "--cyclic")};
    }
    if (!a.star.empty()) {
        const auto groups = split(a.star, ';');
        if (groups.size() != 4) {
            throw InvalidInput("expected b;n1,q1,d1;n2,q2,d2;n3,q3,d3", "--star");
        }
        StarQuotient s;
        s.b = parse_integer_flag(groups[0], "--star");
        for (std::size_t i = 0; i < 3; ++i) {
            const auto parts = split(groups[i + 1], ',');
            if (parts.size() != 3) {
                throw InvalidInput("arm is n,q,d", "--star");
            }
            s.arms[i] = {parse_integer_flag(parts[0], "--star"), parse_integer_flag(parts[1], "--star"),
                         parse_rational_flag(parts[2], "--star")};
        }
        return s;
    }
    const auto parts = split(a.germ_mu_tau, ',');
    if (parts.size() != 2) {
        throw InvalidInput("expected mu,tau", "--germ-mu-tau");
    }
    return ReducedGerm{parse_integer_flag(parts[0], "--germ-mu-tau"), parse_integer_flag(parts[1], "--germ-mu-tau")};
}

Report run_local(const LocalArgs& a) {
    const LocalSingularity s = local_from_args(a);
    validate(s);
    Report r{"local"};
    const EulerValue v = euler_local(s);
    r.value("value", v.value, true);
    r.label("kind", to_string(v.kind));
    r.label("lc", to_string(v.lc));
    r.labels["input"] = io::local_to_json(s).dump();
    if (const auto* st = std::get_if<StarQuotient>(&s)) {
        const auto [inv, assignment] = validate_star(*st);
        r.value("b0", inv.b0);
        r.value("alpha", inv.alpha);
        r.value("beta", inv.beta);
        const CoverDegreeRecord cover = cover_degree(inv.b0, assignment.triple);
        r.values["triple"] = Json::array();
        std::string triple;
        for (const auto& p : assignment.triple) {
            r.values["triple"].push_back(p.get_str());
            triple += (triple.empty() ? "" : ",") + p.get_str();
        }
        r.lines.push_back("triple " + triple);
        r.value("cover_degree", cover.degree);
        r.refs = {"star-quotient", "polyhedral-cover-degree"};
    } else if (std::holds_alternative<Ordinary>(s)) {
        r.refs = {"ordinary-point"};
    } else if (std::holds_alternative<CyclicQuotient>(s)) {
        r.refs = {"cyclic-quotient"};
    } else {
        r.refs = {"milnor-minus-tjurina"};
    }
    if (v.kind == Exactness::UpperBound) {
        r.notes.push_back("four or more boundary lines in general ratio: value is an upper bound");
    }
    return r;
}

// --- germ ------------------------------------------------------------------------

struct GermArgs {
    std::vector<std::string> polynomials;
    DocumentSource src;
    unsigned cap = 0;
    unsigned jobs = 1;
};

unsigned default_cap() {
    const char* env = std::getenv("OE_DEFAULT_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultGermCap;
    }
    const Integer v = parse_integer_flag(env, "OE_DEFAULT_CAP");
    if (v < 2 || v > 400) {
        throw InvalidInput("cap must lie in [2, 400]", "OE_DEFAULT_CAP");
    }
    return static_cast<unsigned>(v.get_ui());
}

Report run_germ(const GermArgs& a, unsigned jobs) {
    require_one_source({{"polynomial", !a.polynomials.empty()},
                        {"--input", !a.src.input_path.empty()},
                        {"--doc", !a.src.doc.empty()}});
    std::vector<CurveGerm> germs;
    std::vector<std::string> names;
    if (!a.polynomials.empty()) {
        for (const auto& p : a.polynomials) {
            germs.push_back(CurveGerm::parse(p));
            names.push_back(p);
        }
    } else {
        const Json doc = a.src.load();
        if (doc.is_array()) {
            for (std::size_t i = 0; i < doc.size(); ++i) {
                germs.push_back(io::germ_from_json(doc[i], "germs[" + std::to_string(i) + "]"));
                names.push_back(germs.back().str());
            }
        } else {
            germs.push_back(io::germ_from_json(doc));
            names.push_back(germs.back().str());
        }
    }
    const unsigned cap = a.cap != 0 ? a.cap : default_cap();
    std::vector<GermInvariants> results(germs.size());
    const std::size_t width = std::max(1u, jobs);
    for (std::size_t start = 0; start < germs.size(); start += width) {
        std::vector<std::future<GermInvariants>> batch;
        const std::size_t stop = std::min(germs.size(), start + width);
        for (std::size_t i = start; i < stop; ++i) {
            batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred,
                                       [&germs, i, cap] { return germ_invariants(germs[i], cap); }));
        }
        for (std::size_t i = start; i < stop; ++i) {
            results[i] = batch[i - start].get();
        }
    }

    Report r{"germ"};
    r.refs = {"milnor-number", "tjurina-number", "milnor-minus-tjurina", "lct-obstruction"};
    r.values["germs"] = Json::array();
    r.labels["germs"] = Json::array();
    std::vector<std::pair<Integer, Integer>> pairs;
    for (std::size_t i = 0; i < germs.size(); ++i) {
        const auto& g = results[i];
        const Integer mu = static_cast<unsigned long>(g.mu);
        const Integer tau = static_cast<unsigned long>(g.tau);
        pairs.emplace_back(mu, tau);
        r.values["germs"].push_back({{"mu", mu.get_str()},
                                     {"tau", tau.get_str()},
                                     {"e_orb", Integer(mu - tau).get_str()},
                                     {"truncation", std::to_string(g.truncation_used)}});
        r.labels["germs"].push_back(germs[i].str());
        const std::string line = "mu=" + mu.get_str() + " tau=" + tau.get_str() + " e_orb=" + Integer(mu - tau).get_str();
        r.lines.push_back(germs.size() == 1 ? line : names[i] + ": " + line);
    }
    const LctReport lct = lct_obstruction(pairs);
    r.values["lct_obstruction"] = lct.obstruction.get_str();
    r.labels["lct_verdict"] = to_string(lct.verdict);
    r.lines.push_back(std::string("lct ") + to_string(lct.verdict) + " (obstruction " + lct.obstruction.get_str() + ")");
    if (lct.verdict == LctVerdict::NoObstruction) {
        r.notes.push_back("zero obstruction is necessary, not sufficient, for the logarithmic comparison theorem");
    }
    return r;
}

// --- global ------------------------------------------------------------------------

Report run_global(const DocumentSource& src) {
    require_one_source({{"--input", !src.input_path.empty()}, {"--doc", !src.doc.empty()}});
    const PairDescription pair = io::pair_from_json(src.load());
    Report r{"global"};
    r.refs = {"global-assembly", "log-bmy", "branch-multiplicity-bound"};
    const BmyReport bmy = check_bmy(pair);
    const CurveBoundReport cb = check_curve_bound(pair);
    r.value("e_orb", bmy.e_orb.value, true);
    r.label("kind", to_string(bmy.e_orb.kind));
    r.label("lc", to_string(bmy.e_orb.lc));
    r.value("bmy_lhs", bmy.lhs, true);
    r.value("bmy_rhs", bmy.rhs, true);
    r.value("bmy_slack", bmy.slack, true);
    r.label("bmy_verdict", to_string(bmy.verdict));
    r.label("bmy_equality", bmy.equality_flag ? "true" : "false");
    r.value("curve_lhs", cb.lhs, true);
    r.value("curve_rhs", cb.rhs, true);
    r.value("curve_slack", cb.slack, true);
    r.label("curve_verdict", to_string(cb.verdict));
    r.notes = bmy.notes;
    for (const auto& n : cb.notes) {
        if (std::find(r.notes.begin(), r.notes.end(), n) == r.notes.end()) {
            r.notes.push_back(n);
        }
    }
    r.verdict = (bmy.verdict == Verdict::Violation || cb.verdict == Verdict::Violation) ? "violation"
                                                                                         : to_string(bmy.verdict);
    return r;
}

// --- arrangement ---------------------------------------------------------------------

struct ArrangementArgs {
    DocumentSource src;
    std::string k;
    std::string t;
};

Report run_arrangement(const ArrangementArgs& a) {
    const bool flags = !a.k.empty() || !a.t.empty();
    require_one_source({{"--input", !a.src.input_path.empty()}, {"--doc", !a.src.doc.empty()}, {"--k/--t", flags}});
    ArrangementData data;
    if (flags) {
        if (a.k.empty() || a.t.empty()) {
            throw InvalidInput("--k and --t go together", "--t");
        }
        data.k = parse_integer_flag(a.k, "--k");
        for (const auto& item : split(a.t, ',')) {
            const auto rt = split(item, ':');
            if (rt.size() != 2) {
                throw InvalidInput("expected r:t_r pairs, got '" + item + "'", "--t");
            }
            const Integer rr = parse_integer_flag(rt[0], "--t");
            if (data.t.contains(rr)) {
                throw InvalidInput("r = " + rr.get_str() + " given twice", "--t");
            }
            data.t[rr] = parse_integer_flag(rt[1], "--t");
        }
        validate_arrangement(data);
    } else {
        data = io::arrangement_from_json(a.src.load());
    }
    const ArrangementReport rep = check_arrangement(data);
    Report r{"arrangement"};
    r.refs = {"arrangement-bounds", "plane-curve-inequality"};
    r.value("sum_rt", rep.sum_rt);
    r.value("bound_rt", rep.bound_rt);
    r.value("slack_rt", rep.slack_rt());
    r.label("equality_rt", rep.equality_rt ? "true" : "false");
    r.value("sum_r2t", rep.sum_r2t);
    r.value("bound_r2t", rep.bound_r2t);
    r.value("slack_r2t", rep.slack_r2t());
    r.label("equality_r2t", rep.equality_r2t ? "true" : "false");
    r.verdict = to_string(rep.verdict);
    if (rep.verdict == ArrangementVerdict::HypothesisNotMet) {
        r.notes.push_back("a point lies on " + rep.largest_r.get_str() + " > 2k/3 lines (large pencil)");
    }
    return r;
}

// --- cusps ---------------------------------------------------------------------------

struct CuspArgs {
    std::string degree;
    std::string alpha;
    bool optimize = false;
    std::string grid;
};

Report run_cusps(const CuspArgs& a) {
    Report r{"cusps"};
    if (a.optimize) {
        if (!a.degree.empty() || !a.alpha.empty()) {
            throw InvalidInput("--optimize excludes --degree/--alpha", "--optimize");
        }
        const Integer grid = a.grid.empty() ? Integer(10000) : parse_integer_flag(a.grid, "--grid");
        const CuspRatioOptimum opt = cusp_ratio_optimize(grid);
        r.refs = {"cusp-local-formula", "cusp-ratio-bound"};
        r.value("grid", grid);
        r.value("alpha_star", opt.alpha_star, true);
        r.value("ratio_star", opt.ratio_star, true);
        r.label("below_5_16", opt.ratio_star < Rational(5, 16) ? "true" : "false");
        r.label("above_9_32", opt.ratio_star > Rational(9, 32) ? "true" : "false");
        return r;
    }
    if (!a.grid.empty()) {
        throw InvalidInput("--grid needs --optimize", "--grid");
    }
    if (a.degree.empty() || a.alpha.empty()) {
        throw InvalidInput("give --degree and --alpha, or --optimize", "cusps");
    }
    const CuspBoundQuery q{parse_integer_flag(a.degree, "--degree"), parse_rational_flag(a.alpha, "--alpha")};
    if (q.d < 1) {
        throw InvalidInput("degree must be positive", "--degree");
    }
    if (q.alpha.sign() <= 0 || q.alpha > Rational(5, 6)) {
        throw InvalidInput("alpha must lie in (0, 5/6]", "--alpha");
    }
    r.refs = {"cusp-local-formula", "plane-curve-inequality"};
    r.value("cusp_euler", cusp_euler(q.alpha), true);
    r.value("cost_per_cusp", cusp_cost(q.alpha), true);
    r.value("capacity", cusp_capacity(q), true);
    if (!cusp_query_pseudoeffective(q)) {
        r.verdict = "hypothesis-not-met";
        r.notes.push_back("alpha*d < 3: K + alpha C is not pseudoeffective");
        return r;
    }
    r.value("max_cusps", cusp_count_bound(q));
    return r;
}

// --- bound -----------------------------------------------------------------------------

struct BoundArgs {
    std::string c1_sq;
    std::string c2;
    std::string genus;
    bool ordinary = false;
};

Report run_bound(const BoundArgs& a) {
    if (a.c1_sq.empty() || a.c2.empty() || a.genus.empty()) {
        throw InvalidInput("--c1sq, --c2 and --genus are required", "bound");
    }
    const Integer c1_sq = parse_integer_flag(a.c1_sq, "--c1sq");
    const Integer c2 = parse_integer_flag(a.c2, "--c2");
    const Integer g = parse_integer_flag(a.genus, "--genus");
    if (g < 0) {
        throw InvalidInput("genus must be nonnegative", "--genus");
    }
    Report r{"bound"};
    r.refs = {a.ordinary ? "canonical-degree-ordinary" : "canonical-degree-general"};
    if (!canonical_degree_applicable(c1_sq, c2, a.ordinary)) {
        r.verdict = "hypothesis-not-met";
        r.notes.push_back(a.ordinary ? "needs c1^2 > c2" : "needs c1^2 > 2 c2");
        return r;
    }
    r.value("max_K_dot_C", canonical_degree_bound(c1_sq, c2, g, a.ordinary), true);
    return r;
}

// --- check -------------------------------------------------------------------------------

struct CheckArgs {
    DocumentSource src;
    std::string c1_sq;
    std::string c2;
    std::string alpha;
    std::string k_dot_c;
    std::string c_sq;
    std::string points;
};

Report run_check(const CheckArgs& a) {
    const bool flags = !a.c1_sq.empty() || !a.c2.empty() || !a.alpha.empty() || !a.k_dot_c.empty() ||
                       !a.c_sq.empty() || !a.points.empty();
    require_one_source({{"--input", !a.src.input_path.empty()}, {"--doc", !a.src.doc.empty()}, {"flags", flags}});
    io::PlaneCurveQuery q;
    if (flags) {
        if (a.c1_sq.empty() || a.c2.empty() || a.alpha.empty() || a.k_dot_c.empty() || a.c_sq.empty()) {
            throw InvalidInput("--c1sq, --c2, --alpha, --kc and --csq are required", "check");
        }
        q.c1_sq = parse_integer_flag(a.c1_sq, "--c1sq");
        q.c2 = parse_integer_flag(a.c2, "--c2");
        q.alpha = parse_rational_flag(a.alpha, "--alpha");
        q.k_dot_c = parse_integer_flag(a.k_dot_c, "--kc");
        q.c_sq = parse_integer_flag(a.c_sq, "--csq");
        if (!a.points.empty()) {
            for (const auto& item : split(a.points, ',')) {
                const auto parts = split(item, ':');
                if (parts.size() != 2) {
                    throw InvalidInput("expected mu:e_orb pairs, got '" + item + "'", "--points");
                }
                q.points.push_back({parse_integer_flag(parts[0], "--points"), parse_rational_flag(parts[1], "--points")});
            }
        }
    } else {
        q = io::plane_curve_query_from_json(a.src.load());
    }
    const PlaneCurveReport g = check_plane_curve_inequality(q.c1_sq, q.c2, q.alpha, q.k_dot_c, q.c_sq, q.points);
    Report r{"check"};
    r.refs = {"plane-curve-inequality"};
    r.value("lhs", g.lhs, true);
    r.value("rhs", g.rhs, true);
    r.value("slack", g.slack, true);
    r.label("equality", g.equality ? "true" : "false");
    r.verdict = g.holds ? "holds" : "violation";
    r.notes.push_back("caller warrants (X, alpha C) log canonical and K + alpha C pseudoeffective");
    return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact orbifold Euler numbers of surface pairs and the inequalities they certify", "oecli"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    unsigned jobs = 1;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--jobs", jobs, "Parallel workers for batch evaluation")->check(CLI::Range(1u, 256u));

    LocalArgs local;
    auto* local_cmd = app.add_subcommand("local", "Local orbifold Euler number of a pair germ");
    add_document_options(local_cmd, local.src);
    local_cmd->add_option("--ordinary", local.ordinary, "Branch coefficients, e.g. 1/2,1/2,1/2");
    local_cmd->add_option("--cyclic", local.cyclic, "n,q,d1,d2");
    local_cmd->add_option("--star", local.star, "b;n1,q1,d1;n2,q2,d2;n3,q3,d3");
    local_cmd->add_option("--germ-mu-tau", local.germ_mu_tau, "mu,tau of a reduced germ");

    GermArgs germ;
    auto* germ_cmd = app.add_subcommand("germ", "Milnor/Tjurina numbers of plane curve germs");
    germ_cmd->add_option("polynomial", germ.polynomials, "Polynomials in x, y, e.g. \"x^2+y^3\"");
    add_document_options(germ_cmd, germ.src);
    germ_cmd->add_option("--cap", germ.cap, "Truncation cap (default $OE_DEFAULT_CAP or 30)")->check(CLI::Range(2u, 400u));

    DocumentSource global;
    auto* global_cmd = app.add_subcommand("global", "Global orbifold Euler number and inequality checks");
    add_document_options(global_cmd, global);

    ArrangementArgs arrangement;
    auto* arr_cmd = app.add_subcommand("arrangement", "Line-arrangement bounds");
    add_document_options(arr_cmd, arrangement.src);
    arr_cmd->add_option("--k", arrangement.k, "Number of lines");
    arr_cmd->add_option("--t", arrangement.t, "Point counts r:t_r, e.g. 2:3,3:4");

    CuspArgs cusps;
    auto* cusp_cmd = app.add_subcommand("cusps", "Cusp-count bounds for plane curves");
    cusp_cmd->add_option("--degree", cusps.degree, "Curve degree d");
    cusp_cmd->add_option("--alpha", cusps.alpha, "Boundary coefficient alpha in (0, 5/6]");
    cusp_cmd->add_flag("--optimize", cusps.optimize, "Minimize the asymptotic ratio over a rational grid");
    cusp_cmd->add_option("--grid", cusps.grid, "Grid denominator (default 10000)");

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "Canonical degree bound for curves on surfaces of general type");
    bound_cmd->add_option("--c1sq", bound.c1_sq, "c1^2 of the surface");
    bound_cmd->add_option("--c2", bound.c2, "c2 of the surface");
    bound_cmd->add_option("--genus", bound.genus, "Geometric genus of the curve");
    bound_cmd->add_flag("--ordinary", bound.ordinary, "Curve has only ordinary singularities");

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Plane-curve inequality for (X, alpha C)");
    add_document_options(check_cmd, check.src);
    check_cmd->add_option("--c1sq", check.c1_sq, "c1^2");
    check_cmd->add_option("--c2", check.c2, "c2");
    check_cmd->add_option("--alpha", check.alpha, "alpha");
    check_cmd->add_option("--kc", check.k_dot_c, "K.C");
    check_cmd->add_option("--csq", check.c_sq, "C^2");
    check_cmd->add_option("--points", check.points, "Singular points mu:e_orb, comma separated");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    const bool machine = format == "machine";
    std::string command = "oecli";
    try {
        Report r;
        if (local_cmd->parsed()) {
            command = "local";
            r = run_local(local);
        } else if (germ_cmd->parsed()) {
            command = "germ";
            r = run_germ(germ, jobs);
        } else if (global_cmd->parsed()) {
            command = "global";
            r = run_global(global);
        } else if (arr_cmd->parsed()) {
            command = "arrangement";
            r = run_arrangement(arrangement);
        } else if (cusp_cmd->parsed()) {
            command = "cusps";
            r = run_cusps(cusps);
        } else if (bound_cmd->parsed()) {
            command = "bound";
            r = run_bound(bound);
        } else {
            command = "check";
            r = run_check(check);
        }
        emit(r, machine, out);
        return exit_code_for(r.verdict);
    } catch (const std::exception& e) {
        // InvalidInput, NotQuotient, NotIsolated and domain errors all mean the
        // input cannot be certified as given.
        err << "error: " << command << ": " << e.what() << "\n";
        if (machine) {
            Json j;
            j["command"] = command;
            j["verdict"] = "invalid-input";
            j["error"] = e.what();
            out << j.dump(2) << "\n";
        }
        return kInvalidInput;
    }
}

}  // namespace orbeuler::cli
