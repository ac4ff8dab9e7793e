#pragma once

#include <functional>
#include <vector>

#include "dihedral/connection_set.hpp"

namespace dihedral {

// Atoms of inverse-closure: an involution by itself, or a rotation paired
// with its inverse. Unions of atoms are exactly the inverse-closed
// identity-free subsets of D_2n.
struct inverse_orbit {
    std::vector<element> members;  // one or two elements
};

// Canonical atom order: rotation orbits by exponent, then reflections.
std::vector<inverse_orbit> inverse_orbits(int n);

// Streams every inverse-closed identity-free subset with 2 <= |S| <= max_size
// in lexicographic order of its atom indices. Non-generating sets are
// included; callers filter or flag them.
void for_each_connection_set(int n, int max_size,
                             const std::function<void(const connection_set&)>& fn);

std::vector<connection_set> enumerate_connection_sets(int n, int max_size);

}  // namespace dihedral
