#pragma once

// JSON documents consumed and emitted by the command-line front end.
// All rationals travel as "p/q" strings; integers may be JSON integers or
// decimal strings (for values beyond 64 bits).

#include <string>
#include <vector>

#include "json.hpp"
#include "orbeuler/appbench.hpp"
#include "orbeuler/germlab.hpp"
#include "orbeuler/localsing.hpp"
#include "orbeuler/pairspace.hpp"

namespace orbeuler::io {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& j, const std::string& path);
Integer integer_from_json(const Json& j, const std::string& path);
Json to_json(const Rational& r);

LocalSingularity local_from_json(const Json& j, const std::string& path = "local");
Json local_to_json(const LocalSingularity& s);

PairDescription pair_from_json(const Json& j);
ArrangementData arrangement_from_json(const Json& j);

/// Accepts {"germ": {"terms": [[i, j, "p/q"], ...]}} or {"terms": [...]}.
CurveGerm germ_from_json(const Json& j, const std::string& path = "germ");

struct PlaneCurveQuery {
    Integer c1_sq;
    Integer c2;
    Rational alpha;
    Integer k_dot_c;
    Integer c_sq;
    std::vector<CurvePointData> points;
};

/// {"c1_sq", "c2", "alpha", "K_dot_C", "C_sq", "points": [[mu, "e_orb"], ...]}
PlaneCurveQuery plane_curve_query_from_json(const Json& j);

/// Parses text as JSON, reporting syntax errors as InvalidInput.
Json parse_document(const std::string& text, const std::string& origin);

}  // namespace orbeuler::io
