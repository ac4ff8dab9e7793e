#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dihedral/element.hpp"

namespace dihedral {

// Inverse-closed, identity-free subset S of D_2n, kept in canonical order
// (rotations by exponent, then reflections by exponent). Construction
// validates every invariant; instances are immutable by convention.
struct connection_set {
    int modulus = min_modulus;
    std::vector<element> members;

    static connection_set from_elements(int modulus, std::vector<element> members);

    // Comma-separated r<k>/s<k> tokens, e.g. "r1,r4,s0". Whitespace is
    // ignored; exponents are reduced mod n.
    static connection_set parse(int modulus, std::string_view text);

    int size() const { return static_cast<int>(members.size()); }
    bool contains(const element& x) const;
    std::string to_string() const;

    friend bool operator==(const connection_set&, const connection_set&) = default;
};

// Subgroup generated by `seed`, computed by product/inverse fixpoint
// iteration. Always contains the identity; the result size divides 2n.
std::vector<element> closure(std::span<const element> seed, int modulus);

// Oracle generating test: S generates D_2n iff its closure has 2n elements.
bool is_generating(const connection_set& s);

// Closed-form generating test. Covers exactly two shapes:
//   {a^i b, a^j b}          -> generating iff gcd(n, i-j) == 1
//   {a^{n/2}, a^i b, a^j b} -> total verdict from gcd(i-j, n) and n mod 4
// Returns nullopt for every other shape. Wherever it applies it agrees with
// is_generating (checked exhaustively in the test suite).
std::optional<bool> is_generating_fast(const connection_set& s);

}  // namespace dihedral
