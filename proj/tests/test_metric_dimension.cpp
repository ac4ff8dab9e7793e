#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "dihedral/enumerate.hpp"
#include "dihedral/metric_dimension.hpp"
#include "dihedral/structure.hpp"
#include "support/naive_dimension.hpp"

using namespace dihedral;
using dihedral::testing::naive_metric_dimension;

namespace {

cayley_graph make(int n, const std::string& set_text) {
    return build_cayley(n, connection_set::parse(n, set_text));
}

// Exhaustive sweeps meet instances whose dimension exceeds the default k cap
// (some 4-regular graphs on 14+ vertices need 7 witnesses), so they raise it.
search_config exhaustive_config() {
    search_config cfg;
    cfg.max_k = 16;
    return cfg;
}

graph path_graph(int n) {
    graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// All generating sets for n in [lo, hi] with |S| <= max_size.
void for_each_connected(int lo, int hi, int max_size,
                        const std::function<void(int, const connection_set&, const cayley_graph&)>& fn) {
    for (int n = lo; n <= hi; ++n) {
        for_each_connection_set(n, max_size, [&](const connection_set& s) {
            auto g = build_cayley(n, s);
            if (g.connected) fn(n, s, g);
        });
    }
}

}  // namespace

TEST_CASE("adjacent vertices resolve the 10-cycle") {
    auto g = make(5, "s0,s1");
    REQUIRE(regular_degree(g.topology) == 2);
    const int neighbor = g.topology.adj[0][0];
    auto cert = is_resolving(g, std::vector<int>{0, neighbor});
    CHECK(cert.resolves);
    CHECK(cert.table.size() == 10);
}

TEST_CASE("the full vertex set always resolves") {
    for (auto [n, text] :
         std::vector<std::pair<int, const char*>>{{2, "s0,s1"}, {5, "r1,r4,s1"}, {4, "s0,s1,s2"}}) {
        auto g = make(n, text);
        std::vector<int> all(g.vertex_count());
        std::iota(all.begin(), all.end(), 0);
        CHECK(is_resolving(g, all).resolves);
    }
}

TEST_CASE("one witness cannot resolve the complete graph on four vertices") {
    auto g = make(2, "r1,s0,s1");
    auto cert = is_resolving(g, std::vector<int>{0});
    CHECK_FALSE(cert.resolves);
    CHECK(cert.failing_pair == std::pair<int, int>{1, 2});
    CHECK(cert.table[1] == cert.table[2]);
}

TEST_CASE("certificate refusals") {
    auto disconnected = make(6, "s0,s2");
    CHECK_THROWS_AS(is_resolving(disconnected, std::vector<int>{0}), std::invalid_argument);
    auto g = make(2, "s0,s1");
    CHECK_THROWS_AS(is_resolving(g, std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(is_resolving(g, std::vector<int>{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(is_resolving(g, std::vector<int>{7}), std::invalid_argument);
}

TEST_CASE("certificate verdicts are internally consistent") {
    std::mt19937 rng(99);
    for_each_connected(2, 5, 3, [&](int, const connection_set&, const cayley_graph& g) {
        const int v_count = g.vertex_count();
        std::vector<int> witnesses;
        for (int v = 0; v < v_count; ++v) {
            if (rng() % 3 == 0) witnesses.push_back(v);
        }
        if (witnesses.empty()) witnesses.push_back(static_cast<int>(rng() % v_count));
        auto cert = is_resolving(g, witnesses);
        if (cert.resolves) {
            auto rows = cert.table;
            std::sort(rows.begin(), rows.end());
            CHECK(std::adjacent_find(rows.begin(), rows.end()) == rows.end());
        } else {
            auto [u, v] = cert.failing_pair;
            CHECK(u < v);
            CHECK(cert.table[u] == cert.table[v]);
        }
    });
}

TEST_CASE("solver values on the named small graphs") {
    auto c4 = metric_dimension_exact(make(2, "s0,s1"));
    CHECK(c4.dimension == 2);
    CHECK(c4.basis == std::vector<int>{0, 2});

    auto k4 = metric_dimension_exact(make(2, "r1,s0,s1"));
    CHECK(k4.dimension == 3);
    CHECK(k4.basis == std::vector<int>{0, 1, 2});

    auto prism5 = metric_dimension_exact(make(5, "r1,r4,s1"));
    CHECK(prism5.dimension == 2);

    auto q3 = hypercube_q3();
    CHECK(metric_dimension_exact(q3, all_pairs_distances(q3)).dimension == 3);
}

TEST_CASE("solver agrees with the unpruned reference search") {
    for_each_connected(2, 8, 4, [&](int n, const connection_set& s, const cayley_graph& g) {
        CAPTURE(n);
        CAPTURE(s.to_string());
        auto fast = metric_dimension_exact(g, exhaustive_config());
        auto reference = naive_metric_dimension(g.topology, g.distances());
        REQUIRE(reference.has_value());
        CHECK(fast.dimension == *reference);
    });
}

TEST_CASE("paths have dimension one; nothing else does") {
    for (int len : {3, 4, 7}) {
        auto p = path_graph(len);
        auto result = metric_dimension_exact(p, all_pairs_distances(p));
        CHECK(result.dimension == 1);
        CHECK(result.basis == std::vector<int>{0});
    }
    // a path whose endpoints sit in the middle of the index order
    graph zigzag(5);
    zigzag.add_edge(2, 0);
    zigzag.add_edge(0, 3);
    zigzag.add_edge(3, 1);
    zigzag.add_edge(1, 4);
    auto result = metric_dimension_exact(zigzag, all_pairs_distances(zigzag));
    CHECK(result.dimension == 1);
    CHECK(result.basis == std::vector<int>{2});

    for_each_connected(2, 8, 3, [&](int, const connection_set&, const cayley_graph& g) {
        CHECK_FALSE(is_path_graph(g.topology));
        CHECK(metric_dimension_exact(g, exhaustive_config()).dimension >= 2);
    });
}

TEST_CASE("dimension stays within its universal bounds") {
    for_each_connected(2, 6, 4, [&](int n, const connection_set&, const cayley_graph& g) {
        auto result = metric_dimension_exact(g, exhaustive_config());
        CHECK(result.dimension >= 1);
        CHECK(result.dimension <= 2 * n - 1);
    });
}

TEST_CASE("twin classes and the twin bound") {
    // complete graph: one class of all four vertices
    auto k4 = make(2, "r1,s0,s1");
    auto classes_k4 = twin_classes(k4.distances());
    REQUIRE(classes_k4.size() == 1);
    CHECK(classes_k4[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(twin_lower_bound(k4.distances()) == 3);

    // 4-cycle: two antipodal classes
    auto c4 = make(2, "s0,s1");
    auto classes_c4 = twin_classes(c4.distances());
    CHECK(classes_c4.size() == 2);
    CHECK(twin_lower_bound(c4.distances()) == 2);

    // the cube has no twins
    auto q3 = hypercube_q3();
    CHECK(twin_classes(all_pairs_distances(q3)).empty());
    CHECK(twin_lower_bound(all_pairs_distances(q3)) == 1);
}

TEST_CASE("every superset of a resolving set resolves") {
    std::mt19937 rng(4242);
    std::vector<cayley_graph> pool;
    for_each_connected(2, 7, 4, [&](int, const connection_set&, const cayley_graph& g) {
        pool.push_back(g);
    });
    REQUIRE(!pool.empty());
    for (int trial = 0; trial < 200; ++trial) {
        const cayley_graph& g = pool[rng() % pool.size()];
        auto basis = metric_dimension_exact(g, exhaustive_config()).basis;
        std::vector<int> rest;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (std::find(basis.begin(), basis.end(), v) == basis.end()) rest.push_back(v);
        }
        std::shuffle(rest.begin(), rest.end(), rng);
        const std::size_t extra = 1 + rng() % rest.size();
        std::vector<int> superset = basis;
        superset.insert(superset.end(), rest.begin(), rest.begin() + extra);
        CHECK(is_resolving(g, superset).resolves);
    }
}

TEST_CASE("result is identical for parallelism degrees 1, 2 and 8") {
    std::vector<cayley_graph> graphs;
    graphs.push_back(make(6, "r3,s1,s2"));   // 12 vertices, dimension above 2
    graphs.push_back(make(8, "r1,r7,s0"));   // 16-vertex ring pair
    graphs.push_back(make(6, "r1,r5,s0,s3"));
    graphs.push_back(make(3, "s0,s1,s2"));
    for (const auto& g : graphs) {
        search_config base;
        auto reference = metric_dimension_exact(g, base);
        for (int jobs : {2, 8}) {
            search_config cfg;
            cfg.parallelism = jobs;
            auto parallel = metric_dimension_exact(g, cfg);
            CHECK(parallel.dimension == reference.dimension);
            CHECK(parallel.basis == reference.basis);
        }
    }
}

TEST_CASE("solver refusals and caps") {
    auto disconnected = make(6, "s0,s2");
    CHECK_THROWS_AS(metric_dimension_exact(disconnected), std::invalid_argument);

    graph k2(2);
    k2.add_edge(0, 1);
    CHECK_THROWS_AS(metric_dimension_exact(k2, all_pairs_distances(k2)), std::invalid_argument);

    auto big = make(8, "r1,r7,s0");
    search_config tight_vertices;
    tight_vertices.max_vertices = 10;
    CHECK_THROWS_AS(metric_dimension_exact(big, tight_vertices), search_limit_error);

    auto k4 = make(2, "r1,s0,s1");
    search_config tight_k;
    tight_k.max_k = 2;
    CHECK_THROWS_AS(metric_dimension_exact(k4, tight_k), search_limit_error);
}

TEST_CASE("stats count work and pruning") {
    auto prism5 = make(5, "r1,r4,s1");
    auto result = metric_dimension_exact(prism5);
    CHECK(result.stats.examined >= 1);
    // a hit at level k prunes the rest of that level
    CHECK(result.stats.examined + result.stats.pruned >= 45);
}

TEST_CASE("basis shape on a 4-cycle basis") {
    auto c4 = make(2, "s0,s1");
    auto report = dim2_basis_properties(c4, 0, 2);
    CHECK(report.all_ok());
    CHECK(report.shortest_path_count == 1);
    CHECK(report.path == std::vector<int>{0, 2});
    CHECK(report.endpoint_degrees_ok);
}

TEST_CASE("basis shape flags a high-degree endpoint") {
    // complete bipartite 4+4: every vertex has degree 4
    auto g = make(4, "s0,s1,s2,s3");
    REQUIRE(regular_degree(g.topology) == 4);
    auto report = basis_shape(g.topology, g.distances(), 0, 1);
    CHECK_FALSE(report.endpoint_degrees_ok);
    CHECK_FALSE(report.all_ok());
}

TEST_CASE("basis shape counts shortest paths") {
    // between antipodal 4-cycle vertices there are two shortest paths
    auto c4 = make(2, "s0,s1");
    auto report = basis_shape(c4.topology, c4.distances(), 0, 1);
    CHECK(report.shortest_path_count == 2);
    CHECK_FALSE(report.unique_shortest_path);
}

TEST_CASE("a non-resolving pair is refused") {
    auto k4 = make(2, "r1,s0,s1");
    CHECK_THROWS_AS(dim2_basis_properties(k4, 0, 1), std::invalid_argument);
}

TEST_CASE("every basis the solver reports at dimension two satisfies the shape constraints") {
    for_each_connected(2, 8, 4, [&](int n, const connection_set& s, const cayley_graph& g) {
        auto result = metric_dimension_exact(g, exhaustive_config());
        if (result.dimension != 2) return;
        CAPTURE(n);
        CAPTURE(s.to_string());
        auto report = dim2_basis_properties(g, result.basis[0], result.basis[1]);
        CHECK(report.all_ok());
    });
}
