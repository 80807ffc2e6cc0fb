#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "betti.hpp"
#include "lattice.hpp"
#include "oracle.hpp"
#include "syzygy.hpp"

namespace hibi {

using json = nlohmann::json;

// {"elements": [...], "covers": [[i, j], ...]}, i covered by j, zero-based
inline Lattice lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw Error(ErrorKind::BadInput, "lattice JSON needs \"elements\" and \"covers\"");
    std::vector<std::string> names;
    for (auto& e : j.at("elements"))
        names.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    std::vector<std::pair<int, int>> cov;
    for (auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2)
            throw Error(ErrorKind::BadInput, "each cover must be a pair [i, j]");
        cov.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return Lattice::from_covers(std::move(names), cov);
}

inline json lattice_to_json(const Lattice& L) {
    json j;
    j["elements"] = L.labels();
    j["covers"] = json::array();
    for (auto [a, b] : L.covers()) j["covers"].push_back({a, b});
    return j;
}

inline Lattice read_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::BadInput, path + ": " + e.what());
    }
    return lattice_from_json(j);
}

inline json element_to_json(const ModuleElement& e) {
    json terms = json::array();
    for (auto& t : e.terms) {
        json mono = json::array();
        for (auto [v, x] : t.mono.exponents()) mono.push_back({v, x});
        terms.push_back({{"coeff", t.coeff.get_str()}, {"monomial", mono}, {"gen_index", t.gen}});
    }
    return terms;
}

inline ModuleElement element_from_json(const json& terms) {
    ModuleElement e;
    for (auto& t : terms) {
        Monomial m;
        for (auto& ve : t.at("monomial")) m = m * Monomial::var(ve[0].get<int>(), ve[1].get<int>());
        e.terms.push_back({mpq_class(t.at("coeff").get<std::string>()), m, t.at("gen_index").get<int>()});
    }
    return e;
}

inline json typed_to_json(const TypedSyzygy& s) {
    return {{"kind", std::string(to_string(s.kind))},
            {"witness", s.witness},
            {"terms", element_to_json(s.element)}};
}

inline json rows_to_json(const std::vector<GradedBettiRow>& rows) {
    json out = json::array();
    for (auto& r : rows)
        out.push_back({{"degree", r.degree},
                       {"kernel_dim", r.kernel_dim},
                       {"trivial_dim", r.trivial_dim},
                       {"minimal_generators", r.minimal_generators}});
    return out;
}

inline std::string lattice_hash(const Lattice& L) {
    auto cf = canonical_form(L);
    std::uint64_t h = 1469598103934665603ull;
    for (auto b : cf) h = (h ^ b) * 1099511628211ull;
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace hibi
