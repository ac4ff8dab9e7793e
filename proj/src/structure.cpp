#include "dihedral/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "dihedral/errors.hpp"

namespace dihedral {
namespace {

// Per-vertex invariant used to prune candidate images: degree, sorted
// neighbour degrees, and the sorted distance row (which carries the
// eccentricity as its last entry).
struct vertex_signature {
    int degree;
    std::vector<int> neighbor_degrees;
    std::vector<dist_t> distance_profile;

    friend bool operator==(const vertex_signature&, const vertex_signature&) = default;
    friend auto operator<=>(const vertex_signature&, const vertex_signature&) = default;
};

std::vector<vertex_signature> signatures(const graph& g, const distance_matrix& d) {
    std::vector<vertex_signature> sigs(g.n_vertices);
    for (int v = 0; v < g.n_vertices; ++v) {
        auto& s = sigs[v];
        s.degree = g.degree(v);
        for (int w : g.adj[v]) s.neighbor_degrees.push_back(g.degree(w));
        std::sort(s.neighbor_degrees.begin(), s.neighbor_degrees.end());
        auto row = d.row(v);
        s.distance_profile.assign(row.begin(), row.end());
        std::sort(s.distance_profile.begin(), s.distance_profile.end());
    }
    return sigs;
}

// BFS assignment order: after the first vertex of each component, every
// vertex is adjacent to an already-assigned one, which keeps the branching
// factor at the degree.
std::vector<int> assignment_order(const graph& g) {
    std::vector<int> order;
    std::vector<char> seen(g.n_vertices, 0);
    for (int start = 0; start < g.n_vertices; ++start) {
        if (seen[start]) continue;
        seen[start] = 1;
        order.push_back(start);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
            for (int w : g.adj[order[head]]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
            }
        }
    }
    return order;
}

bool extend_mapping(const graph& g, const graph& h, const std::vector<int>& order,
                    const std::vector<vertex_signature>& sig_g,
                    const std::vector<vertex_signature>& sig_h, std::size_t depth,
                    std::vector<int>& map, std::vector<char>& used) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int cand = 0; cand < h.n_vertices; ++cand) {
        if (used[cand] || sig_g[v] != sig_h[cand]) continue;
        bool consistent = true;
        for (std::size_t i = 0; i < depth && consistent; ++i) {
            const int prev = order[i];
            consistent = g.adjacent(v, prev) == h.adjacent(cand, map[prev]);
        }
        if (!consistent) continue;
        map[v] = cand;
        used[cand] = 1;
        if (extend_mapping(g, h, order, sig_g, sig_h, depth + 1, map, used)) return true;
        used[cand] = 0;
        map[v] = -1;
    }
    return false;
}

bool preserves_adjacency(const graph& g, const graph& h, const std::vector<int>& map) {
    for (int u = 0; u < g.n_vertices; ++u) {
        for (int v = u + 1; v < g.n_vertices; ++v) {
            if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
        }
    }
    return true;
}

// Walks a connected 2-regular graph and maps it onto the canonical cycle.
std::vector<int> cycle_mapping(const graph& g) {
    std::vector<int> map(g.n_vertices, -1);
    int prev = -1;
    int cur = 0;
    for (int pos = 0; pos < g.n_vertices; ++pos) {
        map[cur] = pos;
        int next = (g.adj[cur][0] == prev) ? g.adj[cur][1] : g.adj[cur][0];
        prev = cur;
        cur = next;
    }
    return map;
}

}  // namespace

std::string to_string(structure_verdict::kind_t kind) {
    switch (kind) {
        case structure_verdict::kind_t::cycle: return "cycle";
        case structure_verdict::kind_t::prism: return "prism";
        case structure_verdict::kind_t::mobius: return "mobius";
        case structure_verdict::kind_t::cubic_bipartite: return "cubic_bipartite";
        case structure_verdict::kind_t::other: return "other";
    }
    return "other";
}

std::string describe(const structure_verdict& v) {
    if (v.parameter > 0) {
        return to_string(v.kind) + "(" + std::to_string(v.parameter) + ")";
    }
    return to_string(v.kind);
}

graph canonical_cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    graph g(m);
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    return g;
}

graph canonical_prism(int n) {
    if (n < 3) throw std::invalid_argument("prism needs ring length at least 3");
    graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(n + i, n + (i + 1) % n);
        g.add_edge(i, n + i);
    }
    return g;
}

graph canonical_mobius(int m) {
    if (m < 4 || m % 2 != 0) {
        throw std::invalid_argument("Mobius ladder needs an even vertex count >= 4");
    }
    graph g(m);
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    for (int i = 0; i < m / 2; ++i) g.add_edge(i, i + m / 2);
    return g;
}

graph hypercube_q3() {
    graph g(8);
    for (int u = 0; u < 8; ++u) {
        for (int bit = 0; bit < 3; ++bit) {
            int v = u ^ (1 << bit);
            if (u < v) g.add_edge(u, v);
        }
    }
    return g;
}

std::optional<std::vector<int>> isomorphic(const graph& g, const graph& h) {
    if (g.n_vertices > max_isomorphism_vertices || h.n_vertices > max_isomorphism_vertices) {
        throw search_limit_error("isomorphism search capped at " +
                                 std::to_string(max_isomorphism_vertices) + " vertices");
    }
    if (g.n_vertices != h.n_vertices || g.edge_count() != h.edge_count()) {
        return std::nullopt;
    }
    if (g.n_vertices == 0) return std::vector<int>{};

    const auto dg = all_pairs_distances(g);
    const auto dh = all_pairs_distances(h);
    auto sig_g = signatures(g, dg);
    auto sig_h = signatures(h, dh);
    {
        auto a = sig_g;
        auto b = sig_h;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    const auto order = assignment_order(g);
    std::vector<int> map(g.n_vertices, -1);
    std::vector<char> used(h.n_vertices, 0);
    if (!extend_mapping(g, h, order, sig_g, sig_h, 0, map, used)) return std::nullopt;
    if (!preserves_adjacency(g, h, map)) {
        throw std::logic_error("isomorphism witness failed verification");
    }
    return map;
}

structure_verdict recognize(const graph& g) {
    if (!is_connected(g)) {
        throw std::invalid_argument("structure recognition requires a connected graph");
    }
    structure_verdict verdict;
    const auto degree = regular_degree(g);
    const int m = g.n_vertices;

    if (degree == 2 && m >= 3) {
        verdict.kind = structure_verdict::kind_t::cycle;
        verdict.parameter = m;
        verdict.mapping = cycle_mapping(g);
        return verdict;
    }
    if (degree == 3) {
        if (m % 2 == 0 && m / 2 >= 3) {
            if (auto map = isomorphic(g, canonical_prism(m / 2))) {
                verdict.kind = structure_verdict::kind_t::prism;
                verdict.parameter = m / 2;
                verdict.mapping = std::move(map);
                return verdict;
            }
        }
        if (m >= 4 && m % 2 == 0) {
            if (auto map = isomorphic(g, canonical_mobius(m))) {
                verdict.kind = structure_verdict::kind_t::mobius;
                verdict.parameter = m;
                verdict.mapping = std::move(map);
                return verdict;
            }
        }
        if (is_bipartite(g)) {
            verdict.kind = structure_verdict::kind_t::cubic_bipartite;
            return verdict;
        }
    }
    return verdict;
}

structure_verdict recognize(const cayley_graph& g) {
    if (!g.connected) {
        throw std::invalid_argument("structure recognition requires a connected graph");
    }
    return recognize(g.topology);
}

}  // namespace dihedral
