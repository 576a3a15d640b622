#include "orbeuler/json_io.hpp"

#include <set>

namespace orbeuler::io {

namespace {

const Json& require(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) {
        throw InvalidInput("expected an object", path);
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw InvalidInput("missing field", path + "." + key);
    }
    return *it;
}

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    if (!obj.is_object()) {
        throw InvalidInput("expected an object", path);
    }
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items()) {
        if (!ok.contains(key)) {
            throw InvalidInput("unknown field", path + "." + key);
        }
    }
}

const Json& require_array(const Json& j, const std::string& path) {
    if (!j.is_array()) {
        throw InvalidInput("expected an array", path);
    }
    return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

}  // namespace

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) {
        return Rational(Integer(j.dump(), 10));
    }
    if (!j.is_string()) {
        throw InvalidInput("expected a rational string \"p/q\"", path);
    }
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const InvalidInput& e) {
        throw InvalidInput(e.what(), path);
    }
}

Integer integer_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) {
        return Integer(j.dump(), 10);
    }
    if (j.is_string()) {
        const Rational r = [&] {
            try {
                return Rational::parse(j.get<std::string>());
            } catch (const InvalidInput& e) {
                throw InvalidInput(e.what(), path);
            }
        }();
        if (r.is_integer()) {
            return r.numerator();
        }
    }
    throw InvalidInput("expected an integer", path);
}

Json to_json(const Rational& r) { return r.str(); }

LocalSingularity local_from_json(const Json& j, const std::string& path) {
    const Json& type_field = require(j, "type", path);
    if (!type_field.is_string()) {
        throw InvalidInput("expected a string", path + ".type");
    }
    const std::string type = type_field.get<std::string>();
    LocalSingularity out;
    if (type == "ordinary") {
        reject_unknown_keys(j, {"type", "coeffs"}, path);
        Ordinary o;
        const Json& coeffs = require_array(require(j, "coeffs", path), path + ".coeffs");
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            o.coeffs.push_back(rational_from_json(coeffs[i], at(path + ".coeffs", i)));
        }
        out = std::move(o);
    } else if (type == "cyclic") {
        reject_unknown_keys(j, {"type", "n", "q", "d1", "d2"}, path);
        const Integer n = integer_from_json(require(j, "n", path), path + ".n");
        const Integer q = integer_from_json(require(j, "q", path), path + ".q");
        ChainDescriptor chain = [&] {
            try {
                return ChainDescriptor::make(n, q);
            } catch (const InvalidInput& e) {
                throw InvalidInput(e.what(), path + ".n");
            }
        }();
        out = CyclicQuotient{chain, rational_from_json(require(j, "d1", path), path + ".d1"),
                             rational_from_json(require(j, "d2", path), path + ".d2")};
    } else if (type == "star") {
        reject_unknown_keys(j, {"type", "b", "arms"}, path);
        StarQuotient s;
        s.b = integer_from_json(require(j, "b", path), path + ".b");
        const Json& arms = require_array(require(j, "arms", path), path + ".arms");
        if (arms.size() != 3) {
            throw InvalidInput("a star needs exactly 3 arms", path + ".arms");
        }
        for (std::size_t i = 0; i < 3; ++i) {
            const std::string ap = at(path + ".arms", i);
            const Json& arm = require_array(arms[i], ap);
            if (arm.size() != 3) {
                throw InvalidInput("arm is [n, q, d]", ap);
            }
            s.arms[i] = {integer_from_json(arm[0], ap + "[0]"), integer_from_json(arm[1], ap + "[1]"),
                         rational_from_json(arm[2], ap + "[2]")};
        }
        out = std::move(s);
    } else if (type == "germ_mu_tau") {
        reject_unknown_keys(j, {"type", "mu", "tau"}, path);
        out = ReducedGerm{integer_from_json(require(j, "mu", path), path + ".mu"),
                          integer_from_json(require(j, "tau", path), path + ".tau")};
    } else {
        throw InvalidInput("unknown type '" + type + "' (ordinary, cyclic, star, germ_mu_tau)", path + ".type");
    }
    try {
        validate(out);
    } catch (const InvalidInput& e) {
        throw InvalidInput(e.what(), e.field().empty() ? path : path + "." + e.field());
    }
    return out;
}

Json local_to_json(const LocalSingularity& s) {
    struct Emit {
        Json operator()(const Ordinary& o) const {
            Json coeffs = Json::array();
            for (const auto& c : o.coeffs) {
                coeffs.push_back(c.str());
            }
            return {{"type", "ordinary"}, {"coeffs", coeffs}};
        }
        Json operator()(const CyclicQuotient& c) const {
            return {{"type", "cyclic"}, {"n", c.chain.n().get_str()}, {"q", c.chain.q().get_str()},
                    {"d1", c.d1.str()}, {"d2", c.d2.str()}};
        }
        Json operator()(const StarQuotient& st) const {
            Json arms = Json::array();
            for (const auto& a : st.arms) {
                arms.push_back(Json::array({a.n.get_str(), a.q.get_str(), a.d.str()}));
            }
            return {{"type", "star"}, {"b", st.b.get_str()}, {"arms", arms}};
        }
        Json operator()(const ReducedGerm& g) const {
            return {{"type", "germ_mu_tau"}, {"mu", g.mu.get_str()}, {"tau", g.tau.get_str()}};
        }
    };
    return std::visit(Emit{}, s);
}

PairDescription pair_from_json(const Json& j) {
    reject_unknown_keys(j, {"surface", "components", "points", "effective"}, "pair");
    PairDescription pair;
    const Json& surface = require(j, "surface", "pair");
    reject_unknown_keys(surface, {"mode", "e_top", "c1_sq"}, "surface");
    const Json& mode = require(surface, "mode", "surface");
    if (mode == "plane") {
        pair.surface = SurfaceData::plane();
        if (surface.contains("e_top")) {
            pair.surface.e_top = integer_from_json(surface["e_top"], "surface.e_top");
        }
        if (surface.contains("c1_sq")) {
            pair.surface.c1_sq = integer_from_json(surface["c1_sq"], "surface.c1_sq");
        }
    } else if (mode == "generic") {
        pair.surface.mode = SurfaceMode::Generic;
        pair.surface.e_top = integer_from_json(require(surface, "e_top", "surface"), "surface.e_top");
        pair.surface.c1_sq = integer_from_json(require(surface, "c1_sq", "surface"), "surface.c1_sq");
    } else {
        throw InvalidInput("mode must be \"plane\" or \"generic\"", "surface.mode");
    }

    if (j.contains("components")) {
        const Json& comps = require_array(j["components"], "components");
        for (std::size_t i = 0; i < comps.size(); ++i) {
            const std::string cp = at("components", i);
            const Json& c = comps[i];
            reject_unknown_keys(c, {"id", "a", "genus", "degree", "pairings"}, cp);
            ComponentData comp;
            const Json& id = require(c, "id", cp);
            if (!id.is_string()) {
                throw InvalidInput("expected a string", cp + ".id");
            }
            comp.id = id.get<std::string>();
            comp.a = rational_from_json(require(c, "a", cp), cp + ".a");
            if (c.contains("genus")) {
                comp.genus = integer_from_json(c["genus"], cp + ".genus");
            }
            if (c.contains("degree")) {
                comp.degree = integer_from_json(c["degree"], cp + ".degree");
            }
            if (c.contains("pairings")) {
                const Json& pr = c["pairings"];
                if (!pr.is_object()) {
                    throw InvalidInput("expected an object", cp + ".pairings");
                }
                for (const auto& [key, value] : pr.items()) {
                    comp.pairings[key] = integer_from_json(value, cp + ".pairings." + key);
                }
            }
            pair.components.push_back(std::move(comp));
        }
    }

    if (j.contains("points")) {
        const Json& pts = require_array(j["points"], "points");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::string pp = at("points", i);
            const Json& p = pts[i];
            reject_unknown_keys(p, {"id", "local", "incident", "m_P"}, pp);
            SingularPointData point;
            const Json& id = require(p, "id", pp);
            if (!id.is_string()) {
                throw InvalidInput("expected a string", pp + ".id");
            }
            point.id = id.get<std::string>();
            point.local = local_from_json(require(p, "local", pp), pp + ".local");
            if (p.contains("incident")) {
                const Json& inc = require_array(p["incident"], pp + ".incident");
                for (std::size_t k = 0; k < inc.size(); ++k) {
                    const std::string ip = at(pp + ".incident", k);
                    const Json& entry = require_array(inc[k], ip);
                    if (entry.size() != 2 || !entry[0].is_string()) {
                        throw InvalidInput("incidence is [\"component id\", branches]", ip);
                    }
                    point.incident.push_back({entry[0].get<std::string>(), integer_from_json(entry[1], ip + "[1]")});
                }
            }
            if (p.contains("m_P")) {
                point.m_P = rational_from_json(p["m_P"], pp + ".m_P");
            }
            pair.points.push_back(std::move(point));
        }
    }

    if (j.contains("effective")) {
        if (!j["effective"].is_boolean()) {
            throw InvalidInput("expected a boolean", "effective");
        }
        pair.effective = j["effective"].get<bool>();
    }
    validate_pair(pair);
    return pair;
}

ArrangementData arrangement_from_json(const Json& j) {
    reject_unknown_keys(j, {"k", "t"}, "arrangement");
    ArrangementData a;
    a.k = integer_from_json(require(j, "k", "arrangement"), "k");
    const Json& t = require(j, "t", "arrangement");
    if (!t.is_object()) {
        throw InvalidInput("expected an object {\"r\": t_r}", "t");
    }
    for (const auto& [key, value] : t.items()) {
        const Integer r = integer_from_json(Json(key), "t." + key);
        a.t[r] = integer_from_json(value, "t." + key);
    }
    validate_arrangement(a);
    return a;
}

CurveGerm germ_from_json(const Json& j, const std::string& path) {
    const bool wrapped = j.is_object() && j.contains("germ");
    const Json& body = wrapped ? j["germ"] : j;
    const std::string& bp = path;
    reject_unknown_keys(body, {"terms"}, bp);
    const Json& terms = require_array(require(body, "terms", bp), bp + ".terms");
    std::vector<GermTerm> out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string tp = at(bp + ".terms", i);
        const Json& t = require_array(terms[i], tp);
        if (t.size() != 3) {
            throw InvalidInput("term is [i, j, \"p/q\"]", tp);
        }
        const Integer ei = integer_from_json(t[0], tp + "[0]");
        const Integer ej = integer_from_json(t[1], tp + "[1]");
        if (ei < 0 || ej < 0 || ei > 1000 || ej > 1000) {
            throw InvalidInput("exponents must lie in [0, 1000]", tp);
        }
        out.push_back({static_cast<unsigned>(ei.get_ui()), static_cast<unsigned>(ej.get_ui()),
                       rational_from_json(t[2], tp + "[2]")});
    }
    try {
        return CurveGerm(out);
    } catch (const InvalidInput& e) {
        throw InvalidInput(e.what(), bp + ".terms");
    }
}

PlaneCurveQuery plane_curve_query_from_json(const Json& j) {
    reject_unknown_keys(j, {"c1_sq", "c2", "alpha", "K_dot_C", "C_sq", "points"}, "check");
    PlaneCurveQuery q;
    q.c1_sq = integer_from_json(require(j, "c1_sq", "check"), "c1_sq");
    q.c2 = integer_from_json(require(j, "c2", "check"), "c2");
    q.alpha = rational_from_json(require(j, "alpha", "check"), "alpha");
    q.k_dot_c = integer_from_json(require(j, "K_dot_C", "check"), "K_dot_C");
    q.c_sq = integer_from_json(require(j, "C_sq", "check"), "C_sq");
    if (j.contains("points")) {
        const Json& pts = require_array(j["points"], "points");
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::string pp = at("points", i);
            const Json& p = require_array(pts[i], pp);
            if (p.size() != 2) {
                throw InvalidInput("point is [mu, \"e_orb\"]", pp);
            }
            q.points.push_back({integer_from_json(p[0], pp + "[0]"), rational_from_json(p[1], pp + "[1]")});
        }
    }
    return q;
}

Json parse_document(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what(), origin);
    }
}

}  // namespace orbeuler::io
