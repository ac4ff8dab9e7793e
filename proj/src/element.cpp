#include "dihedral/element.hpp"

#include <numeric>
#include <stdexcept>

namespace dihedral {
namespace {

void check_modulus(int n) {
    if (n < min_modulus || n > max_modulus) {
        throw std::invalid_argument("dihedral modulus must lie in [" +
                                    std::to_string(min_modulus) + ", " +
                                    std::to_string(max_modulus) + "], got " +
                                    std::to_string(n));
    }
}

int reduce(int k, int n) {
    int r = k % n;
    return r < 0 ? r + n : r;
}

}  // namespace

element element::rotation(int exponent, int modulus) {
    check_modulus(modulus);
    return element{element_kind::rotation, reduce(exponent, modulus), modulus};
}

element element::reflection(int exponent, int modulus) {
    check_modulus(modulus);
    return element{element_kind::reflection, reduce(exponent, modulus), modulus};
}

element element::identity(int modulus) { return rotation(0, modulus); }

element element_at(int vertex_index, int modulus) {
    check_modulus(modulus);
    if (vertex_index < 0 || vertex_index >= 2 * modulus) {
        throw std::invalid_argument("vertex index " + std::to_string(vertex_index) +
                                    " out of range for D_" + std::to_string(2 * modulus));
    }
    return vertex_index < modulus
               ? element::rotation(vertex_index, modulus)
               : element::reflection(vertex_index - modulus, modulus);
}

element multiply(const element& x, const element& y) {
    if (x.modulus != y.modulus) {
        throw std::invalid_argument("cannot multiply elements of D_" +
                                    std::to_string(2 * x.modulus) + " and D_" +
                                    std::to_string(2 * y.modulus));
    }
    const int n = x.modulus;
    // b a^k = a^{-k} b collapses every product onto one of four cases.
    if (x.is_rotation()) {
        return y.is_rotation() ? element::rotation(x.exponent + y.exponent, n)
                               : element::reflection(x.exponent + y.exponent, n);
    }
    return y.is_rotation() ? element::reflection(x.exponent - y.exponent, n)
                           : element::rotation(x.exponent - y.exponent, n);
}

element inverse(const element& x) {
    if (x.is_reflection()) return x;  // every reflection is an involution
    return element::rotation(-x.exponent, x.modulus);
}

int element_order(const element& x) {
    if (x.is_reflection()) return 2;
    return x.modulus / std::gcd(x.exponent, x.modulus);
}

std::string token(const element& x) {
    return (x.is_rotation() ? "r" : "s") + std::to_string(x.exponent);
}

element parse_token(std::string_view text, int modulus) {
    const auto fail = [&] {
        throw std::invalid_argument("invalid connection-set token '" +
                                    std::string(text) + "' (expected r<k> or s<k>)");
    };
    if (text.size() < 2 || (text[0] != 'r' && text[0] != 's')) fail();
    std::size_t pos = 1;
    bool negative = false;
    if (text[pos] == '-') {
        negative = true;
        ++pos;
    }
    if (pos == text.size()) fail();
    long long value = 0;
    for (; pos < text.size(); ++pos) {
        if (text[pos] < '0' || text[pos] > '9') fail();
        value = value * 10 + (text[pos] - '0');
        if (value > 4 * static_cast<long long>(max_modulus)) value %= modulus;
    }
    int exponent = static_cast<int>(value % modulus);
    if (negative) exponent = -exponent;
    return text[0] == 'r' ? element::rotation(exponent, modulus)
                          : element::reflection(exponent, modulus);
}

}  // namespace dihedral
