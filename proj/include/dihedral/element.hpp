#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace dihedral {

// Order of the rotation subgroup. The algebra is cheap across this whole
// range; search-based operations impose their own smaller caps.
inline constexpr int min_modulus = 2;
inline constexpr int max_modulus = 2048;

enum class element_kind : std::uint8_t { rotation, reflection };

// One element of D_2n = <a, b | a^n = b^2 = (ab)^2 = e>: either a^k or a^k b.
// The modulus n travels with each element, so mixing elements from different
// groups is a detectable error instead of silent wraparound.
struct element {
    element_kind kind;
    int exponent;  // always reduced into [0, n)
    int modulus;   // n

    static element rotation(int exponent, int modulus);
    static element reflection(int exponent, int modulus);
    static element identity(int modulus);

    bool is_identity() const {
        return kind == element_kind::rotation && exponent == 0;
    }
    bool is_rotation() const { return kind == element_kind::rotation; }
    bool is_reflection() const { return kind == element_kind::reflection; }

    // Canonical position among the 2n group elements: e, a, ..., a^{n-1},
    // then b, ab, ..., a^{n-1} b. Doubles as the vertex index in Cayley
    // graphs, so the identity is always vertex 0.
    int vertex_index() const {
        return kind == element_kind::rotation ? exponent : modulus + exponent;
    }

    friend bool operator==(const element&, const element&) = default;
};

// Inverse of vertex_index(): the element sitting at a canonical position.
element element_at(int vertex_index, int modulus);

element multiply(const element& x, const element& y);
element inverse(const element& x);

// Smallest positive k with x^k = e.
int element_order(const element& x);

// Token grammar shared by the CLI and the JSON formats:
// r<k> denotes a^k, s<k> denotes a^k b.
std::string token(const element& x);
element parse_token(std::string_view text, int modulus);

}  // namespace dihedral
