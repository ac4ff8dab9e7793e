#include "dihedral/enumerate.hpp"

#include <stdexcept>

namespace dihedral {

std::vector<inverse_orbit> inverse_orbits(int n) {
    element::identity(n);
    std::vector<inverse_orbit> orbits;
    for (int k = 1; 2 * k <= n; ++k) {
        if (2 * k == n) {
            orbits.push_back({{element::rotation(k, n)}});
        } else {
            orbits.push_back({{element::rotation(k, n), element::rotation(n - k, n)}});
        }
    }
    for (int k = 0; k < n; ++k) {
        orbits.push_back({{element::reflection(k, n)}});
    }
    return orbits;
}

void for_each_connection_set(int n, int max_size,
                             const std::function<void(const connection_set&)>& fn) {
    if (max_size < 2) {
        throw std::invalid_argument("connection sets have at least two elements");
    }
    const auto orbits = inverse_orbits(n);
    std::vector<element> current;

    // Depth-first over atom indices, ascending, so sets stream in
    // lexicographic order of their atom-index lists.
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < orbits.size(); ++i) {
            const auto& orbit = orbits[i].members;
            if (current.size() + orbit.size() > static_cast<std::size_t>(max_size)) continue;
            current.insert(current.end(), orbit.begin(), orbit.end());
            if (current.size() >= 2) fn(connection_set::from_elements(n, current));
            self(self, i + 1);
            current.resize(current.size() - orbit.size());
        }
    };
    recurse(recurse, 0);
}

std::vector<connection_set> enumerate_connection_sets(int n, int max_size) {
    std::vector<connection_set> out;
    for_each_connection_set(n, max_size, [&](const connection_set& s) { out.push_back(s); });
    return out;
}

}  // namespace dihedral
