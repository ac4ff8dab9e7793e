#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "dihedral/connection_set.hpp"
#include "dihedral/structure.hpp"

namespace dihedral {

// Shape branch a generating connection set falls into. The first three are
// exactly the dimension-two cases; the rest identify why dimension two is
// ruled out. PRISM_CASE1 is the rotation-pair branch with even n (prism with
// even ring); OTHER is a defensive fallback no generating set reaches.
enum class case_label {
    a_n2,                    // n = |S| = 2
    b_two_reflections,       // S = {a^i b, a^j b}, gcd(i-j, n) = 1
    c_rotpair_reflection,    // n odd, S = {a^i, a^-i, a^j b}, gcd(i, n) = 1
    prism_case1,             // n even, S = {a^i, a^-i, a^j b}
    mobius_21,               // S = {a^{n/2}, a^i b, a^j b}, gcd(i-j, n) = 1
    prism_22,                // S = {a^{n/2}, a^i b, a^j b}, gcd(i-j, n) = 2, n = 2 mod 4
    cubic_bipartite_3refl,   // S = three reflections
    big_set,                 // |S| >= 4
    other,
};

std::string to_string(case_label label);
case_label case_label_from_string(const std::string& text);

// Predicted metric dimension: an exact value, a closed interval, or a lower
// bound only.
struct prediction {
    enum class kind_t { exact, interval, at_least };

    kind_t kind = kind_t::exact;
    int lo = 0;
    int hi = 0;  // meaningful for exact/interval only

    static prediction exact(int k) { return {kind_t::exact, k, k}; }
    static prediction interval(int lo, int hi) { return {kind_t::interval, lo, hi}; }
    static prediction at_least(int k) { return {kind_t::at_least, k, 0}; }

    // True when `dimension` is consistent with this prediction.
    bool admits(int dimension) const;

    friend bool operator==(const prediction&, const prediction&) = default;
};

struct classification {
    bool dim2 = false;
    case_label label = case_label::other;
    prediction predicted;
    std::optional<structure_verdict::kind_t> predicted_structure;
};

// The dimension-two characterization as a constant-time predicate over
// (n, S). Refuses non-generating sets: their graphs are disconnected and the
// metric dimension is undefined there.
classification classify_dim2(int n, const connection_set& s);

// The dimension prediction alone (same refusal rule).
prediction predicted_dimension(int n, const connection_set& s);

nlohmann::json to_json(const prediction& p);
prediction prediction_from_json(const nlohmann::json& j);
nlohmann::json to_json(const classification& c);

}  // namespace dihedral
