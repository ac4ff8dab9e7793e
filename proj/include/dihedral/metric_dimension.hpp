#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dihedral/cayley_graph.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/graph.hpp"

namespace dihedral {

struct search_config {
    int max_vertices = 40;
    int max_k = 6;
    int parallelism = 1;
};

// Witness set W plus the full table of metric representations r(v|W).
// Either every representation is distinct, or failing_pair carries the
// lexicographically smallest pair sharing one.
struct resolving_certificate {
    std::vector<int> witness_set;
    std::vector<std::vector<int>> table;  // table[v][i] = d(v, W[i])
    bool resolves = false;
    std::pair<int, int> failing_pair{-1, -1};
};

struct search_stats {
    std::uint64_t examined = 0;  // candidate subsets tested
    std::uint64_t pruned = 0;    // candidate subsets skipped after a hit
};

struct dimension_result {
    int dimension = 0;
    std::vector<int> basis;  // lexicographically smallest minimum resolving set
    search_stats stats;
};

resolving_certificate is_resolving(const graph& g, const distance_matrix& d,
                                   std::span<const int> witnesses);
resolving_certificate is_resolving(const cayley_graph& g, std::span<const int> witnesses);

// Distance-row twins partition vertices into equivalence classes; every
// resolving set misses at most one vertex per class.
std::vector<std::vector<int>> twin_classes(const distance_matrix& d);
int twin_lower_bound(const distance_matrix& d);

// Exact search: ascends k from the best lower bound, enumerating k-subsets in
// lexicographic order. Deterministic result (minimal k, lexicographically
// smallest basis) for every parallelism degree. Requires a connected graph on
// at least 3 vertices; throws search_limit_error when a cap is exceeded.
dimension_result metric_dimension_exact(const graph& g, const distance_matrix& d,
                                        const search_config& cfg = {});
dimension_result metric_dimension_exact(const cayley_graph& g, const search_config& cfg = {});

// Structural constraints every 2-element basis satisfies: a unique shortest
// path between the two vertices, endpoint degrees at most 3, internal path
// degrees at most 5.
struct basis_shape_report {
    int u = -1;
    int v = -1;
    std::uint64_t shortest_path_count = 0;  // saturating
    std::vector<int> path;                  // the unique shortest path, when unique
    bool unique_shortest_path = false;
    bool endpoint_degrees_ok = false;
    int max_internal_degree = 0;
    bool internal_degrees_ok = false;

    bool all_ok() const {
        return unique_shortest_path && endpoint_degrees_ok && internal_degrees_ok;
    }
};

// Total version: reports the constraints for any vertex pair.
basis_shape_report basis_shape(const graph& g, const distance_matrix& d, int u, int v);

// Spec'd entry point: refuses a pair that does not resolve the graph.
basis_shape_report dim2_basis_properties(const graph& g, const distance_matrix& d,
                                         int u, int v);
basis_shape_report dim2_basis_properties(const cayley_graph& g, int u, int v);

}  // namespace dihedral
