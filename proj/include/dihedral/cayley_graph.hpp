#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dihedral/connection_set.hpp"
#include "dihedral/graph.hpp"

namespace dihedral {

// Cay(D_2n, S): vertices are the 2n group elements in canonical order,
// u ~ v iff u v^{-1} in S. Distances are computed once at build time and the
// whole object is immutable afterwards, so concurrent readers need no locks.
struct cayley_graph {
    int modulus = 0;  // n; the graph has 2n vertices
    connection_set set;
    std::vector<element> vertices;
    graph topology;
    bool connected = false;
    std::shared_ptr<const distance_matrix> dist;

    const distance_matrix& distances() const { return *dist; }
    int vertex_count() const { return topology.n_vertices; }
};

// S need not be generating; a disconnected graph is built and flagged.
cayley_graph build_cayley(int n, connection_set s);

// DOT output: one node per element named by its token, undirected edges
// listed once with canonical endpoint order.
std::string export_dot(const cayley_graph& g);

// JSON schema: {"n", "set", "vertices", "edges"} with canonical ordering.
std::string export_json(const cayley_graph& g);

// Rebuilds a graph from export_json output; rejects payloads whose vertex or
// edge lists do not match the set they claim.
cayley_graph cayley_from_json(std::string_view text);

}  // namespace dihedral
