#include "equising/json_io.hpp"

namespace equising {

using nlohmann::json;

json json_int(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

static json json_ints(const std::vector<Int>& vs) {
    json a = json::array();
    for (const Int& v : vs) a.push_back(json_int(v));
    return a;
}

json to_json(const BiPoly& p) {
    json terms = json::array();
    for (auto it = p.rows().rbegin(); it != p.rows().rend(); ++it)
        for (const auto& [xe, c] : it->second.terms())
            terms.push_back({{"c", rat_text(c)}, {"x", xe}, {"y", it->first}});
    return {{"terms", terms}};
}

BiPoly poly_from_json(const json& j) {
    BiPoly p;
    for (const auto& t : j.at("terms")) {
        const Rat c = rat_from_text(t.at("c").is_string() ? t.at("c").get<std::string>()
                                                          : t.at("c").dump());
        p += BiPoly::monomial(t.at("x").get<long long>(), t.at("y").get<long long>(), c);
    }
    return p;
}

json to_json(const SemigroupData& s) {
    json j{{"generators", json_ints(s.r)},
           {"d", json_ints(s.d)},
           {"e", json_ints(s.e)},
           {"m", json_ints(s.m)}};
    if (s.conductor) j["conductor"] = json_int(*s.conductor);
    return j;
}

json to_json(const ValidationReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures) fails.push_back(f.to_string());
    return {{"valid", r.valid}, {"failures", fails}};
}

json to_json(const CriterionTrace& t) {
    json j;
    j["verdict"] = t.irreducible ? "irreducible" : "reducible";
    if (!t.irreducible) {
        j["reason"] = t.reason;
        j["stage"] = t.stage;
    }
    j["r"] = json_ints(t.r);
    j["d"] = json_ints(t.d);
    j["tschirnhausen"] = t.tschirnhausen_applied;
    json stages = json::array();
    for (const auto& st : t.stages)
        stages.push_back({{"k", st.k},
                          {"r", json_int(st.r_k)},
                          {"d", json_int(st.d_k)},
                          {"fintChecks", st.fint_checks}});
    j["stages"] = stages;
    return j;
}

json to_json(const GenericForm& f) {
    json levels = json::array();
    for (const auto& lvl : f.levels) {
        json cons = json::array();
        for (const auto& c : lvl.constraints)
            cons.push_back({{"i", json_int(c.i)},
                            {"rhs", json_int(c.rhs)},
                            {"coeffs", json_ints(c.coeffs)}});
        levels.push_back({{"e", json_int(lvl.e)},
                          {"forced", {{"theta", json_ints(lvl.forced_theta)}}},
                          {"constraints", cons}});
    }
    return {{"levels", levels}};
}

}  // namespace equising
