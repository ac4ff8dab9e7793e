#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dihedral {

// Dense distance matrices stay affordable up to this many vertices.
inline constexpr int max_graph_vertices = 4096;

// Undirected simple graph: sorted adjacency lists plus per-vertex membership
// bitmasks for O(1) adjacency tests.
struct graph {
    int n_vertices = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::vector<std::uint64_t>> mask;

    graph() = default;
    explicit graph(int n);

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const {
        return (mask[u][static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const;

    friend bool operator==(const graph&, const graph&) = default;
};

using dist_t = std::int16_t;

// Hop counts between all vertex pairs; `unreachable` marks cross-component
// pairs. Rows are contiguous so the solver can stream them.
struct distance_matrix {
    static constexpr dist_t unreachable = -1;

    int n_vertices = 0;
    std::vector<dist_t> flat;  // row-major

    dist_t at(int u, int v) const {
        return flat[static_cast<std::size_t>(u) * n_vertices + v];
    }
    std::span<const dist_t> row(int u) const {
        return {flat.data() + static_cast<std::size_t>(u) * n_vertices,
                static_cast<std::size_t>(n_vertices)};
    }
    // Largest finite entry (0 for an empty matrix).
    int max_distance() const;

    friend bool operator==(const distance_matrix&, const distance_matrix&) = default;
};

std::vector<dist_t> bfs_distances(const graph& g, int source);
distance_matrix all_pairs_distances(const graph& g);

bool is_connected(const graph& g);
bool is_bipartite(const graph& g);

// The common vertex degree, or nullopt when degrees differ.
std::optional<int> regular_degree(const graph& g);

bool is_path_graph(const graph& g);

}  // namespace dihedral
