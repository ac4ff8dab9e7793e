#include "dihedral/connection_set.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace dihedral {

connection_set connection_set::from_elements(int modulus, std::vector<element> members) {
    // element construction already validated the modulus range
    element::identity(modulus);
    for (const element& m : members) {
        if (m.modulus != modulus) {
            throw std::invalid_argument("connection set over n=" + std::to_string(modulus) +
                                        " contains an element of D_" +
                                        std::to_string(2 * m.modulus));
        }
        if (m.is_identity()) {
            throw std::invalid_argument("connection set must not contain the identity");
        }
    }
    std::sort(members.begin(), members.end(),
              [](const element& a, const element& b) { return a.vertex_index() < b.vertex_index(); });
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw std::invalid_argument("connection set contains a duplicate element");
    }
    connection_set s{modulus, std::move(members)};
    for (const element& m : s.members) {
        if (!s.contains(inverse(m))) {
            throw std::invalid_argument("connection set is not inverse-closed: missing " +
                                        token(inverse(m)));
        }
    }
    return s;
}

connection_set connection_set::parse(int modulus, std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    }
    if (compact.empty()) {
        throw std::invalid_argument("connection set string is empty");
    }
    std::vector<element> members;
    std::size_t start = 0;
    while (start <= compact.size()) {
        std::size_t comma = compact.find(',', start);
        if (comma == std::string::npos) comma = compact.size();
        std::string_view tok(compact.data() + start, comma - start);
        if (tok.empty()) {
            throw std::invalid_argument("invalid connection-set token '' (empty)");
        }
        members.push_back(parse_token(tok, modulus));
        start = comma + 1;
        if (comma == compact.size()) break;
    }
    return from_elements(modulus, std::move(members));
}

bool connection_set::contains(const element& x) const {
    return std::binary_search(
        members.begin(), members.end(), x,
        [](const element& a, const element& b) { return a.vertex_index() < b.vertex_index(); });
}

std::string connection_set::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ',';
        out += token(members[i]);
    }
    return out;
}

std::vector<element> closure(std::span<const element> seed, int modulus) {
    element::identity(modulus);
    const int order = 2 * modulus;
    std::vector<char> present(order, 0);
    std::vector<element> found;
    found.reserve(order);

    auto insert = [&](const element& x) {
        if (x.modulus != modulus) {
            throw std::invalid_argument("closure seed mixes moduli");
        }
        char& slot = present[x.vertex_index()];
        if (!slot) {
            slot = 1;
            found.push_back(x);
        }
    };

    insert(element::identity(modulus));
    for (const element& x : seed) insert(x);

    // Fixpoint: the subgroup has at most 2n elements, so a handful of passes
    // over all pairs suffices.
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t count = found.size();
        for (std::size_t i = 0; i < count; ++i) {
            insert(inverse(found[i]));
            for (std::size_t j = 0; j < count; ++j) {
                insert(multiply(found[i], found[j]));
            }
        }
        grew = found.size() > count;
    }

    std::sort(found.begin(), found.end(),
              [](const element& a, const element& b) { return a.vertex_index() < b.vertex_index(); });
    return found;
}

bool is_generating(const connection_set& s) {
    return closure(s.members, s.modulus).size() == static_cast<std::size_t>(2 * s.modulus);
}

std::optional<bool> is_generating_fast(const connection_set& s) {
    const int n = s.modulus;

    // {a^i b, a^j b}
    if (s.size() == 2 && s.members[0].is_reflection() && s.members[1].is_reflection()) {
        const int diff = s.members[0].exponent - s.members[1].exponent;
        return std::gcd(((diff % n) + n) % n, n) == 1;
    }

    // {a^{n/2}, a^i b, a^j b}, n even
    if (s.size() == 3 && n % 2 == 0 && s.members[0].is_rotation() &&
        s.members[0].exponent == n / 2 && s.members[1].is_reflection() &&
        s.members[2].is_reflection()) {
        const int diff = s.members[1].exponent - s.members[2].exponent;
        const int g = std::gcd(((diff % n) + n) % n, n);
        if (g == 1) return true;           // the two reflections alone generate
        if (g == 2) return n % 4 == 2;     // a^{n/2} escapes <a^2> only when n/2 is odd
        return false;                      // rotations stay inside <a^gcd(g, n/2)>
    }

    return std::nullopt;
}

}  // namespace dihedral
