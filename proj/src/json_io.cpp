#include "pellfrieze/json_io.hpp"

#include <string>

namespace pellfrieze {

using nlohmann::json;

json dissection_to_json(const Dissection& d) {
    json arcs = json::array();
    for (const Arc& a : d.arcs()) arcs.push_back({a.u, a.v});
    return json{{"n", d.n()}, {"arcs", arcs}};
}

Dissection dissection_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("arcs")) {
        throw ParseError("dissection document needs fields \"n\" and \"arcs\"");
    }
    if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
    if (!j["arcs"].is_array()) throw ParseError("\"arcs\" must be an array of pairs");
    const int n = j["n"].get<int>();
    std::vector<Arc> arcs;
    for (const auto& entry : j["arcs"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer()) {
            throw ParseError("each arc must be a pair of integers");
        }
        const int u = entry[0].get<int>();
        const int v = entry[1].get<int>();
        if (u == v) throw InvalidDissection("arc endpoints must differ");
        arcs.emplace_back(u, v);
    }
    return Dissection(n, std::move(arcs));
}

json frieze_to_json(const FriezeTable& t) {
    json weights = json::object();
    for (int i = 0; i < t.n(); ++i) {
        for (int j = i + 1; j < t.n(); ++j) {
            weights[std::to_string(i) + "," + std::to_string(j)] = t.at(i, j).str();
        }
    }
    return json{{"n", t.n()}, {"weights", weights}};
}

json scan_report_to_json(const analysis::ScanReport& r) {
    json filters{{"type_max", nullptr},
                 {"separated_only", r.filters.separated_only},
                 {"four_angulations_only", r.filters.four_angulations_only}};
    if (r.filters.type_max) filters["type_max"] = *r.filters.type_max;

    json counterexamples = json::array();
    for (const Dissection& d : r.counterexamples) counterexamples.push_back(dissection_to_json(d));
    json hard = json::array();
    for (const Dissection& d : r.hard_violations) hard.push_back(dissection_to_json(d));

    return json{{"n", r.n},
                {"filters", filters},
                {"from_index", r.from_index},
                {"family_total", r.family_total},
                {"examined", r.examined},
                {"unitary", r.unitary},
                {"tower_decomposable", r.tower_decomposable},
                {"both", r.both},
                {"neither", r.neither},
                {"counterexamples", counterexamples},
                {"hard_violations", hard}};
}

json lemma56_report_to_json(const analysis::Lemma56Report& r) {
    json violations = json::array();
    for (const auto& [d, v] : r.violations) {
        violations.push_back(json{{"dissection", dissection_to_json(d)},
                                  {"triangle", {v.x, v.y, v.z}},
                                  {"third_side", {v.x, v.z}}});
    }
    return json{{"n", r.n},
                {"dissections", r.dissections},
                {"checked", r.checked},
                {"violations", violations}};
}

}  // namespace pellfrieze
