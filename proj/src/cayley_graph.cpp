#include "dihedral/cayley_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace dihedral {

cayley_graph build_cayley(int n, connection_set s) {
    if (s.modulus != n) {
        throw std::invalid_argument("connection set modulus " + std::to_string(s.modulus) +
                                    " does not match n=" + std::to_string(n));
    }
    cayley_graph g;
    g.modulus = n;
    g.set = std::move(s);
    g.vertices.reserve(2 * n);
    for (int i = 0; i < 2 * n; ++i) g.vertices.push_back(element_at(i, n));

    g.topology = graph(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        for (const element& step : g.set.members) {
            // u ~ v iff u v^{-1} in S iff v = s u for some s in S.
            int j = multiply(step, g.vertices[i]).vertex_index();
            if (i < j) g.topology.add_edge(i, j);
        }
    }

    g.dist = std::make_shared<const distance_matrix>(all_pairs_distances(g.topology));
    g.connected = std::none_of(g.dist->row(0).begin(), g.dist->row(0).end(),
                               [](dist_t d) { return d == distance_matrix::unreachable; });
    return g;
}

std::string export_dot(const cayley_graph& g) {
    std::string out = "graph cayley {\n";
    for (const element& v : g.vertices) {
        out += "  " + token(v) + ";\n";
    }
    for (int i = 0; i < g.vertex_count(); ++i) {
        for (int j : g.topology.adj[i]) {
            if (i < j) {
                out += "  " + token(g.vertices[i]) + " -- " + token(g.vertices[j]) + ";\n";
            }
        }
    }
    out += "}\n";
    return out;
}

std::string export_json(const cayley_graph& g) {
    nlohmann::json j;
    j["n"] = g.modulus;
    j["set"] = g.set.to_string();
    auto& verts = j["vertices"] = nlohmann::json::array();
    for (const element& v : g.vertices) verts.push_back(token(v));
    auto& edges = j["edges"] = nlohmann::json::array();
    for (int i = 0; i < g.vertex_count(); ++i) {
        for (int k : g.topology.adj[i]) {
            if (i < k) edges.push_back(nlohmann::json::array({i, k}));
        }
    }
    return j.dump(2);
}

cayley_graph cayley_from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const int n = j.at("n").get<int>();
    auto set = connection_set::parse(n, j.at("set").get<std::string>());
    cayley_graph g = build_cayley(n, std::move(set));

    const auto& verts = j.at("vertices");
    if (verts.size() != g.vertices.size()) {
        throw std::invalid_argument("graph JSON vertex list inconsistent with its set");
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i].get<std::string>() != token(g.vertices[i])) {
            throw std::invalid_argument("graph JSON vertex list inconsistent with its set");
        }
    }
    std::size_t edge_count = 0;
    for (const auto& e : j.at("edges")) {
        int u = e.at(0).get<int>();
        int v = e.at(1).get<int>();
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() ||
            !g.topology.adjacent(u, v)) {
            throw std::invalid_argument("graph JSON edge list inconsistent with its set");
        }
        ++edge_count;
    }
    if (edge_count != static_cast<std::size_t>(g.topology.edge_count())) {
        throw std::invalid_argument("graph JSON edge list inconsistent with its set");
    }
    return g;
}

}  // namespace dihedral
