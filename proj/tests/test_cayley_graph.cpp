#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "dihedral/cayley_graph.hpp"
#include "dihedral/enumerate.hpp"

using namespace dihedral;

namespace {

cayley_graph make(int n, const std::string& set_text) {
    return build_cayley(n, connection_set::parse(n, set_text));
}

int component_count(const graph& g) {
    int components = 0;
    std::vector<char> seen(g.n_vertices, 0);
    for (int start = 0; start < g.n_vertices; ++start) {
        if (seen[start]) continue;
        ++components;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
    }
    return components;
}

void check_distance_axioms(const cayley_graph& g) {
    const auto& d = g.distances();
    const int n = d.n_vertices;
    for (int u = 0; u < n; ++u) {
        CHECK(d.at(u, u) == 0);
        for (int v = 0; v < n; ++v) {
            CHECK(d.at(u, v) == d.at(v, u));
            CHECK((d.at(u, v) == 1) == g.topology.adjacent(u, v));
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            for (int w = 0; w < n; ++w) {
                if (d.at(u, w) == distance_matrix::unreachable ||
                    d.at(w, v) == distance_matrix::unreachable) {
                    continue;
                }
                if (d.at(u, v) == distance_matrix::unreachable) {
                    // one hop through w would connect them
                    CHECK(false);
                } else {
                    CHECK(d.at(u, v) <= d.at(u, w) + d.at(w, v));
                }
            }
        }
    }
}

}  // namespace

TEST_CASE("the 4-cycle arises from n=2 with two reflections") {
    auto g = make(2, "s0,s1");
    CHECK(g.vertex_count() == 4);
    CHECK(g.topology.edge_count() == 4);
    CHECK(regular_degree(g.topology) == 2);
    CHECK(g.connected);
    CHECK(is_bipartite(g.topology));
    // antipodal pairs sit at distance 2
    CHECK(g.distances().at(0, 1) == 2);
    CHECK(g.distances().at(2, 3) == 2);
}

TEST_CASE("adjacency follows the difference rule exactly") {
    for (auto [n, text] : std::vector<std::pair<int, const char*>>{
             {2, "s0,s1"}, {5, "r1,r4,s1"}, {6, "r1,r5,s0,s3"}}) {
        auto g = make(n, text);
        for (int i = 0; i < g.vertex_count(); ++i) {
            for (int j = 0; j < g.vertex_count(); ++j) {
                const bool expected =
                    i != j && g.set.contains(multiply(g.vertices[i], inverse(g.vertices[j])));
                CHECK(g.topology.adjacent(i, j) == expected);
            }
        }
    }
}

TEST_CASE("every vertex has degree equal to the set size") {
    for (auto [n, text] : std::vector<std::pair<int, const char*>>{
             {2, "s0,s1"}, {5, "r1,r4,s1"}, {6, "r3,s1,s2"}, {6, "s0,s2"}}) {
        auto g = make(n, text);
        CHECK(regular_degree(g.topology) == g.set.size());
    }
}

TEST_CASE("the triangular-prism-shaped graph on 10 vertices has 15 edges") {
    auto g = make(5, "r1,r4,s1");
    CHECK(g.vertex_count() == 10);
    CHECK(g.topology.edge_count() == 15);
    CHECK(regular_degree(g.topology) == 3);
    CHECK(g.connected);
    // every vertex sees the whole graph within 3 hops, never fewer
    const auto& d = g.distances();
    for (int v = 0; v < 10; ++v) {
        auto row = d.row(v);
        CHECK(*std::max_element(row.begin(), row.end()) == 3);
    }
}

TEST_CASE("a non-generating set yields a disconnected graph with two components") {
    auto g = make(6, "s0,s2");
    CHECK_FALSE(g.connected);
    CHECK(component_count(g.topology) == 2);
    CHECK(g.distances().at(0, element::rotation(1, 6).vertex_index()) ==
          distance_matrix::unreachable);
}

TEST_CASE("three reflections give a cubic bipartite graph") {
    auto g = make(4, "s0,s1,s2");
    CHECK(is_bipartite(g.topology));
    CHECK(regular_degree(g.topology) == 3);
}

TEST_CASE("set modulus must match the requested n") {
    CHECK_THROWS_AS(build_cayley(5, connection_set::parse(6, "s0,s1")), std::invalid_argument);
}

TEST_CASE("distance matrix axioms hold on every constructed graph") {
    for (int n = 2; n <= 5; ++n) {
        for (const connection_set& s : enumerate_connection_sets(n, 3)) {
            check_distance_axioms(build_cayley(n, s));
        }
    }
}

TEST_CASE("sorted distance rows coincide across vertices of a connected graph") {
    for (int n = 2; n <= 6; ++n) {
        for (const connection_set& s : enumerate_connection_sets(n, 4)) {
            auto g = build_cayley(n, s);
            if (!g.connected) continue;
            const auto& d = g.distances();
            std::vector<dist_t> reference(d.row(0).begin(), d.row(0).end());
            std::sort(reference.begin(), reference.end());
            for (int v = 1; v < g.vertex_count(); ++v) {
                std::vector<dist_t> row(d.row(v).begin(), d.row(v).end());
                std::sort(row.begin(), row.end());
                CHECK(row == reference);
            }
        }
    }
}

TEST_CASE("connectivity coincides with generation for every enumerated set") {
    for (int n = 2; n <= 10; ++n) {
        int checked = 0;
        for_each_connection_set(n, 2 * n, [&](const connection_set& s) {
            auto g = build_cayley(n, s);
            CHECK(g.connected == is_generating(s));
            ++checked;
        });
        CHECK(checked > 0);
    }
}

TEST_CASE("adjacency is symmetric") {
    auto g = make(6, "r1,r5,s0,s3");
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.topology.adj[u]) {
            CHECK(std::binary_search(g.topology.adj[v].begin(), g.topology.adj[v].end(), u));
        }
    }
}

TEST_CASE("DOT export lists each vertex and each edge once") {
    auto g = make(2, "s0,s1");
    const std::string dot = export_dot(g);
    CHECK(dot.find("graph cayley {") == 0);
    std::size_t edges = 0;
    for (std::size_t pos = dot.find("--"); pos != std::string::npos; pos = dot.find("--", pos + 2)) {
        ++edges;
    }
    CHECK(edges == 4);
    for (const char* tok : {"r0", "r1", "s0", "s1"}) {
        CHECK(dot.find(std::string("  ") + tok + ";") != std::string::npos);
    }
}

TEST_CASE("JSON export round-trips to an equal graph") {
    for (auto [n, text] : std::vector<std::pair<int, const char*>>{
             {2, "s0,s1"}, {5, "r1,r4,s1"}, {6, "s0,s2"}}) {
        auto g = make(n, text);
        auto parsed = cayley_from_json(export_json(g));
        CHECK(parsed.modulus == g.modulus);
        CHECK(parsed.set == g.set);
        CHECK(parsed.vertices == g.vertices);
        CHECK(parsed.topology == g.topology);
        CHECK(export_json(parsed) == export_json(g));
    }
}

TEST_CASE("JSON export carries the documented schema") {
    auto g = make(5, "r1,r4,s1");
    auto j = nlohmann::json::parse(export_json(g));
    CHECK(j.at("n") == 5);
    CHECK(j.at("set") == "r1,r4,s1");
    CHECK(j.at("vertices").size() == 10);
    CHECK(j.at("vertices")[0] == "r0");
    CHECK(j.at("edges").size() == 15);
    for (const auto& e : j.at("edges")) {
        REQUIRE(e.size() == 2);
        CHECK(e[0].get<int>() < e[1].get<int>());
    }
}

TEST_CASE("tampered JSON payloads are rejected") {
    auto g = make(2, "s0,s1");
    auto j = nlohmann::json::parse(export_json(g));
    auto broken = j;
    broken["edges"][0][1] = 1;  // claims an edge the rule forbids
    CHECK_THROWS_AS(cayley_from_json(broken.dump()), std::invalid_argument);
    broken = j;
    broken["vertices"][0] = "s3";
    CHECK_THROWS_AS(cayley_from_json(broken.dump()), std::invalid_argument);
}
