#pragma once

// JSON/CSV/DOT emission for the CLI.  All output is deterministic: maps are
// walked in key order and numbers of arbitrary size are rendered as decimal
// strings.

#include <string>

#include <json.hpp>

#include "qcanon/crystal.hpp"

namespace qcanon {

using json = nlohmann::ordered_json;

inline json to_json(const LaurentPoly& p) {
    json j = json::object();
    for (auto& [e, c] : p.coeffs()) j[std::to_string(e)] = c.get_str();
    return j;
}

inline json to_json(const RatFunc& r) {
    return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

inline json word_to_json(const FWord& w) {
    json j = json::array();
    for (int i : w) j.push_back(i + 1);  // 1-based node labels, as on the CLI
    return j;
}

inline json to_json(const UMinusElement& x) {
    json j = json::array();
    for (auto& [w, c] : x.terms())
        j.push_back(json{{"word", word_to_json(w)}, {"coeff", to_json(c)}});
    return j;
}

inline json to_json(const UqElement& x) {
    json j = json::array();
    for (auto& [key, c] : x.terms())
        j.push_back(json{{"f", word_to_json(std::get<0>(key))},
                         {"k", std::get<1>(key)},
                         {"e", word_to_json(std::get<2>(key))},
                         {"coeff", to_json(c)}});
    return j;
}

inline json to_json(const LusztigData& d) {
    json w = json::array();
    for (int i : d.word.letters()) w.push_back(i + 1);
    return json{{"word", w}, {"a", d.a}};
}

inline json to_json(const CrystalGraph& g) {
    json verts = json::array();
    for (auto& v : g.vertices) verts.push_back(json{{"a", v.a}, {"depth", v.depth}});
    json edges = json::array();
    for (auto& e : g.edges)
        edges.push_back(json{{"from", e.from}, {"to", e.to}, {"i", e.label + 1}});
    return json{{"vertices", verts}, {"edges", edges}};
}

inline json to_json(const CanonicalElement& el) {
    json coords = json::array();
    for (auto& [a, c] : el.coords)
        coords.push_back(json{{"data", a}, {"coeff", to_json(c)}});
    return json{{"a", el.a}, {"coords", coords}, {"element", to_json(el.element)}};
}

inline json to_json(const DescentReport& rep) {
    json rows = json::array();
    for (auto& r : rep.rows)
        rows.push_back(json{{"weight", r.nu},
                            {"survivors", r.survivors},
                            {"multiplicity", r.multiplicity}});
    return json{{"rows", rows},
                {"total_survivors", rep.total_survivors},
                {"dimension", rep.dimension},
                {"mechanism_ok", rep.mechanism_ok},
                {"pass", rep.pass},
                {"detail", rep.detail}};
}

// CSV rows: weight (space-separated, quoted), survivors, multiplicity
inline std::string to_csv(const DescentReport& rep) {
    std::string s = "weight,survivors,multiplicity\n";
    for (auto& r : rep.rows) {
        s += "\"";
        for (size_t k = 0; k < r.nu.size(); ++k) {
            if (k) s += " ";
            s += std::to_string(r.nu[k]);
        }
        s += "\"," + std::to_string(r.survivors) + "," + std::to_string(r.multiplicity) +
             "\n";
    }
    s += "\"total\"," + std::to_string(rep.total_survivors) + "," +
         std::to_string(rep.dimension) + "\n";
    return s;
}

}  // namespace qcanon
