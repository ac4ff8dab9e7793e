#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dihedral/cayley_graph.hpp"
#include "dihedral/graph.hpp"

namespace dihedral {

// Backtracking isomorphism stays tractable up to this size.
inline constexpr int max_isomorphism_vertices = 64;

struct structure_verdict {
    enum class kind_t { cycle, prism, mobius, cubic_bipartite, other };

    kind_t kind = kind_t::other;
    // cycle length, prism ring length, or mobius vertex count; 0 otherwise.
    int parameter = 0;
    // Vertex bijection onto the canonical template, when one applies.
    std::optional<std::vector<int>> mapping;
};

std::string to_string(structure_verdict::kind_t kind);
// "prism(5)", "cycle(12)", "cubic_bipartite", ...
std::string describe(const structure_verdict& v);

// Canonical templates.
graph canonical_cycle(int m);        // m >= 3: 0-1-...-(m-1)-0
graph canonical_prism(int n);        // n >= 3: two n-cycles plus rungs i <-> n+i
graph canonical_mobius(int m);       // m >= 4 even: m-cycle plus chords i <-> i+m/2
graph hypercube_q3();                // K_2 x K_2 x K_2

// A bijection g -> h preserving adjacency both ways, or nullopt. Deterministic:
// vertices of g are assigned in BFS order and candidate images are tried in
// increasing index order, so the first mapping in that order is returned.
// Throws when either graph exceeds max_isomorphism_vertices.
std::optional<std::vector<int>> isomorphic(const graph& g, const graph& h);

// Template recognition in fixed precedence order:
// cycle, then prism, then mobius, then cubic bipartite, else other.
structure_verdict recognize(const graph& g);
structure_verdict recognize(const cayley_graph& g);

}  // namespace dihedral
