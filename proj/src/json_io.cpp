#include "gbg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gbg {

GraphBundle graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("bad graph JSON: ") + e.what());
    }
    require(j.contains("vertices") && j["vertices"].is_array(), "graph JSON needs \"vertices\"");
    require(j.contains("edges") && j["edges"].is_array(), "graph JSON needs \"edges\"");
    GraphBundle b;
    for (const auto& v : j["vertices"]) {
        require(v.is_string(), "vertex names must be strings");
        b.g.add_vertex(v.get<std::string>());
    }
    int auto_id = 0;
    for (const auto& e : j["edges"]) {
        require(e.is_array() && (e.size() == 2 || e.size() == 3), "edge entries are [u, v, name?]");
        std::string u = e[0].get<std::string>();
        std::string v = e[1].get<std::string>();
        std::string name =
            e.size() == 3 ? e[2].get<std::string>() : b.g.fresh_edge_name("e" + std::to_string(auto_id));
        ++auto_id;
        b.g.add_edge(u, v, name);
    }
    if (j.contains("rotation")) {
        require(j["rotation"].is_object(), "rotation must map vertex -> edge list");
        for (auto it = j["rotation"].begin(); it != j["rotation"].end(); ++it) {
            std::vector<std::string> names;
            for (const auto& n : it.value()) names.push_back(n.get<std::string>());
            b.g.set_rotation_by_names(it.key(), names);
        }
    }
    if (j.contains("root")) b.g.set_root(j["root"].get<std::string>());
    if (j.contains("tree") && j["tree"].contains("deleted_edges")) {
        for (const auto& n : j["tree"]["deleted_edges"])
            b.deleted_hints.push_back(n.get<std::string>());
    }
    b.g.validate();
    return b;
}

GraphBundle graph_from_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return graph_from_json(ss.str());
}

std::string graph_to_json(const Graph& g, const std::vector<std::string>& deleted_hints) {
    nlohmann::ordered_json j;
    std::vector<std::string> vs;
    for (int v = 0; v < g.vertex_count(); ++v) vs.push_back(g.vertex_name(v));
    j["vertices"] = vs;
    nlohmann::ordered_json es = nlohmann::ordered_json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        es.push_back({g.vertex_name(ed.u), g.vertex_name(ed.v), ed.name});
    }
    j["edges"] = es;
    nlohmann::ordered_json rot = nlohmann::ordered_json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::string> names;
        for (const HalfEdge& h : g.rotation(v)) names.push_back(g.edge(h.edge).name);
        rot[g.vertex_name(v)] = names;
    }
    j["rotation"] = rot;
    if (g.root()) j["root"] = *g.root();
    if (!deleted_hints.empty()) j["tree"] = {{"deleted_edges", deleted_hints}};
    return j.dump(2);
}

QuotientSpec quotient_spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("bad quotient spec JSON: ") + e.what());
    }
    QuotientSpec q;
    if (j.contains("kill"))
        for (const auto& k : j["kill"]) q.kill.push_back(k.get<std::string>());
    if (j.contains("identify"))
        for (const auto& p : j["identify"]) {
            require(p.is_array() && p.size() == 2, "identify entries are pairs");
            q.identify.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
    return q;
}

GraphBundle fixture(const std::string& name) { return graph_from_json(fixture_json(name)); }

} // namespace gbg
