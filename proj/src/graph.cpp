#include "qgw/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

#include "qgw/errors.hpp"

namespace qgw {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

void require_keys(const json& obj, const char* what,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
    for (const char* key : required) {
        if (!obj.contains(key)) {
            throw ValidationError(std::string(what) + ": missing key \"" + key + "\"");
        }
    }
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool known = std::any_of(required.begin(), required.end(),
                                 [&](const char* k) { return key == k; }) ||
                     std::any_of(optional.begin(), optional.end(),
                                 [&](const char* k) { return key == k; });
        if (!known) {
            throw ValidationError(std::string(what) + ": unknown key \"" + key + "\"");
        }
    }
}

SiteId site_id_from(const json& j, const std::string& locus) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ValidationError(locus + ": site id must be a non-negative integer");
    }
    return static_cast<SiteId>(j.get<long long>());
}

double number_from(const json& j, const std::string& locus) {
    if (!j.is_number()) {
        throw ValidationError(locus + ": expected a number");
    }
    return j.get<double>();
}

}  // namespace

void validate_graph_spec(const GraphSpec& spec) {
    const std::size_t n = spec.sites.size();
    if (n == 0) {
        throw ValidationError("graph must have at least one site");
    }

    std::vector<bool> seen(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const SiteId id = spec.sites[k].id;
        if (id >= n) {
            throw ValidationError("site " + std::to_string(k) + ": id " +
                                  std::to_string(id) + " outside dense range 0.." +
                                  std::to_string(n - 1));
        }
        if (seen[id]) {
            throw ValidationError("site " + std::to_string(k) + ": duplicate id " +
                                  std::to_string(id));
        }
        seen[id] = true;
    }

    std::set<std::pair<SiteId, SiteId>> edge_keys;
    for (std::size_t k = 0; k < spec.edges.size(); ++k) {
        const Edge& e = spec.edges[k];
        const std::string locus = "edge " + std::to_string(k);
        if (e.a >= n || e.b >= n) {
            throw ValidationError(locus + ": site " +
                                  std::to_string(e.a >= n ? e.a : e.b) +
                                  " out of range (" + std::to_string(n) + " sites)");
        }
        if (e.a == e.b) {
            throw ValidationError(locus + ": self-loop (" + std::to_string(e.a) +
                                  "," + std::to_string(e.b) + ")");
        }
        auto key = std::minmax(e.a, e.b);
        if (!edge_keys.insert(key).second) {
            throw ValidationError(locus + ": duplicate edge {" +
                                  std::to_string(key.first) + "," +
                                  std::to_string(key.second) + "}");
        }
        if (const auto* name = std::get_if<std::string>(&e.coupling)) {
            if (!spec.parameters.count(*name)) {
                throw UnknownParameterError(locus + ": unknown parameter \"" + *name +
                                            "\"");
            }
        }
    }
}

GraphSpec parse_graph_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("graph spec: ") + e.what());
    }

    if (!doc.is_object()) {
        throw ValidationError("graph spec: top level must be an object");
    }
    require_keys(doc, "graph spec", {"sites", "edges"}, {"parameters"});

    GraphSpec spec;

    const json& sites = doc.at("sites");
    if (!sites.is_array()) {
        throw ValidationError("graph spec: \"sites\" must be an array");
    }
    for (std::size_t k = 0; k < sites.size(); ++k) {
        const std::string locus = "site " + std::to_string(k);
        const json& s = sites[k];
        if (!s.is_object()) {
            throw ValidationError(locus + ": must be an object");
        }
        require_keys(s, locus.c_str(), {"id", "potential"});
        spec.sites.push_back({site_id_from(s.at("id"), locus),
                              number_from(s.at("potential"), locus)});
    }

    const json& edges = doc.at("edges");
    if (!edges.is_array()) {
        throw ValidationError("graph spec: \"edges\" must be an array");
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string locus = "edge " + std::to_string(k);
        const json& e = edges[k];
        if (!e.is_object()) {
            throw ValidationError(locus + ": must be an object");
        }
        require_keys(e, locus.c_str(), {"a", "b", "coupling"});
        Edge edge;
        edge.a = site_id_from(e.at("a"), locus);
        edge.b = site_id_from(e.at("b"), locus);
        const json& c = e.at("coupling");
        if (c.is_number()) {
            edge.coupling = c.get<double>();
        } else if (c.is_string()) {
            edge.coupling = c.get<std::string>();
        } else {
            throw ValidationError(locus + ": coupling must be a number or a parameter name");
        }
        spec.edges.push_back(std::move(edge));
    }

    if (doc.contains("parameters")) {
        const json& params = doc.at("parameters");
        if (!params.is_object()) {
            throw ValidationError("graph spec: \"parameters\" must be an object");
        }
        for (const auto& [name, value] : params.items()) {
            spec.parameters[name] = number_from(value, "parameter \"" + name + "\"");
        }
    }

    validate_graph_spec(spec);
    return spec;
}

std::string serialize_graph_spec(const GraphSpec& spec) {
    ordered_json doc;
    doc["sites"] = ordered_json::array();
    for (const Site& s : spec.sites) {
        doc["sites"].push_back({{"id", s.id}, {"potential", s.potential}});
    }
    doc["edges"] = ordered_json::array();
    for (const Edge& e : spec.edges) {
        ordered_json j{{"a", e.a}, {"b", e.b}};
        if (const auto* v = std::get_if<double>(&e.coupling)) {
            j["coupling"] = *v;
        } else {
            j["coupling"] = std::get<std::string>(e.coupling);
        }
        doc["edges"].push_back(std::move(j));
    }
    doc["parameters"] = ordered_json::object();
    for (const auto& [name, value] : spec.parameters) {
        doc["parameters"][name] = value;
    }
    return doc.dump(2) + "\n";
}

Hamiltonian build_hamiltonian(const GraphSpec& spec,
                              const std::map<std::string, double>& overrides) {
    for (const auto& [name, value] : overrides) {
        (void)value;
        if (!spec.parameters.count(name)) {
            throw UnknownParameterError("override names unknown parameter \"" + name +
                                        "\"");
        }
    }

    Hamiltonian h(spec.sites.size());
    for (const Site& s : spec.sites) {
        h.set_diagonal(s.id, s.potential);
    }
    for (std::size_t k = 0; k < spec.edges.size(); ++k) {
        const Edge& e = spec.edges[k];
        double value = 0.0;
        if (const auto* literal = std::get_if<double>(&e.coupling)) {
            value = *literal;
        } else {
            const std::string& name = std::get<std::string>(e.coupling);
            if (auto it = overrides.find(name); it != overrides.end()) {
                value = it->second;
            } else if (auto it2 = spec.parameters.find(name); it2 != spec.parameters.end()) {
                value = it2->second;
            } else {
                throw UnknownParameterError("edge " + std::to_string(k) +
                                            ": unknown parameter \"" + name + "\"");
            }
        }
        h.set_coupling(e.a, e.b, value);
    }
    return h;
}

GraphSpec builtin_braess4(double b, double s, double c, double V0) {
    GraphSpec spec;
    for (SiteId i = 0; i < 4; ++i) {
        spec.sites.push_back({i, V0});
    }
    spec.edges = {
        {0, 1, "b"},
        {1, 2, "s"},
        {2, 3, "b"},
        {0, 3, "s"},
    };
    if (c != 0.0) {
        spec.edges.push_back({1, 3, "c"});
    }
    spec.parameters = {{"b", b}, {"s", s}, {"c", c}};
    return spec;
}

GraphSpec builtin_braess10(double l, double h, double s, double c,
                           double V1, double V2, double Eu, double Ed,
                           double Vu, double Vd) {
    GraphSpec spec;
    const double potentials[10] = {V1, V1, Eu, Eu, Vu, Ed, Ed, Vd, V2, V2};
    for (SiteId i = 0; i < 10; ++i) {
        spec.sites.push_back({i, potentials[i]});
    }
    spec.edges = {
        {0, 1, "s"}, {2, 3, "s"}, {5, 6, "s"}, {8, 9, "s"},  // double dots
        {1, 2, "h"}, {3, 4, "h"}, {4, 8, "h"},               // upper path
        {1, 5, "l"}, {6, 7, "l"}, {7, 8, "l"},               // lower path
    };
    if (c != 0.0) {
        spec.edges.push_back({4, 7, "c"});
    }
    spec.parameters = {{"l", l}, {"h", h}, {"s", s}, {"c", c}};
    return spec;
}

}  // namespace qgw
