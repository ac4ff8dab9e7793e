#include "dihedral/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dihedral {

graph::graph(int n) : n_vertices(n) {
    if (n < 0 || n > max_graph_vertices) {
        throw std::invalid_argument("graph size " + std::to_string(n) +
                                    " outside [0, " + std::to_string(max_graph_vertices) + "]");
    }
    adj.resize(n);
    mask.assign(n, std::vector<std::uint64_t>((n + 63) / 64, 0));
}

void graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
        throw std::invalid_argument("self-loops are not allowed");
    }
    if (adjacent(u, v)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                    std::to_string(v));
    }
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
    mask[u][static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    mask[v][static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
}

int graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& list : adj) total += list.size();
    return static_cast<int>(total / 2);
}

int distance_matrix::max_distance() const {
    int best = 0;
    for (dist_t d : flat) best = std::max(best, static_cast<int>(d));
    return best;
}

std::vector<dist_t> bfs_distances(const graph& g, int source) {
    std::vector<dist_t> dist(g.n_vertices, distance_matrix::unreachable);
    std::vector<int> frontier{source};
    dist[source] = 0;
    std::vector<int> next;
    for (dist_t level = 1; !frontier.empty(); ++level) {
        next.clear();
        for (int u : frontier) {
            for (int v : g.adj[u]) {
                if (dist[v] == distance_matrix::unreachable) {
                    dist[v] = level;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

distance_matrix all_pairs_distances(const graph& g) {
    distance_matrix m;
    m.n_vertices = g.n_vertices;
    m.flat.resize(static_cast<std::size_t>(g.n_vertices) * g.n_vertices);
    for (int v = 0; v < g.n_vertices; ++v) {
        auto row = bfs_distances(g, v);
        std::copy(row.begin(), row.end(),
                  m.flat.begin() + static_cast<std::size_t>(v) * g.n_vertices);
    }
    return m;
}

bool is_connected(const graph& g) {
    if (g.n_vertices == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](dist_t d) { return d == distance_matrix::unreachable; });
}

bool is_bipartite(const graph& g) {
    std::vector<int> color(g.n_vertices, -1);
    std::vector<int> stack;
    for (int start = 0; start < g.n_vertices; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[u]) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<int> regular_degree(const graph& g) {
    if (g.n_vertices == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < g.n_vertices; ++v) {
        if (g.degree(v) != d) return std::nullopt;
    }
    return d;
}

bool is_path_graph(const graph& g) {
    if (g.n_vertices == 0 || !is_connected(g)) return false;
    if (g.n_vertices == 1) return true;
    int ends = 0;
    for (int v = 0; v < g.n_vertices; ++v) {
        if (g.degree(v) == 1) {
            ++ends;
        } else if (g.degree(v) != 2) {
            return false;
        }
    }
    return ends == 2;
}

}  // namespace dihedral
