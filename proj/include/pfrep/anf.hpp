// Algebraic normal form over F2: Moebius transform of a truth table, degree,
// evaluation, and the elementary-symmetric-polynomial form of weight bits.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pfrep/boolean_function.hpp"

namespace pfrep {

struct anf_polynomial {
    int n = 0;
    std::vector<std::uint32_t> monomials;  // sorted masks with coefficient 1

    bool contains(std::uint32_t s) const {
        return std::binary_search(monomials.begin(), monomials.end(), s);
    }
    friend bool operator==(const anf_polynomial&, const anf_polynomial&) = default;
};

inline anf_polynomial moebius(const boolean_function& f) {
    std::vector<std::uint8_t> a = f.table();
    const std::size_t size = a.size();
    for (std::size_t bit = 1; bit < size; bit <<= 1) {
        for (std::size_t m = 0; m < size; ++m) {
            if (m & bit) a[m] ^= a[m ^ bit];
        }
    }
    anf_polynomial p;
    p.n = f.var_count();
    for (std::uint32_t s = 0; s < size; ++s)
        if (a[s]) p.monomials.push_back(s);
    return p;
}

inline int deg_f2(const anf_polynomial& p) {
    int d = 0;
    for (auto s : p.monomials) d = std::max(d, std::popcount(s));
    return d;
}

inline std::uint8_t eval_anf(const anf_polynomial& p, const std::vector<std::uint8_t>& bits) {
    if (static_cast<int>(bits.size()) != p.n) throw std::invalid_argument("eval_anf: arity mismatch");
    std::uint32_t m = 0;
    for (int i = 0; i < p.n; ++i) m |= static_cast<std::uint32_t>(bits[i] ? 1 : 0) << i;
    std::uint8_t acc = 0;
    for (auto s : p.monomials) acc ^= ((s & m) == s) ? 1 : 0;
    return acc;
}

inline boolean_function to_function(const anf_polynomial& p) {
    const std::size_t size = checked_table_size(p.n);
    // invert the Moebius transform by running it again
    std::vector<std::uint8_t> a(size, 0);
    for (auto s : p.monomials) a[s] = 1;
    for (std::size_t bit = 1; bit < size; bit <<= 1) {
        for (std::size_t m = 0; m < size; ++m) {
            if (m & bit) a[m] ^= a[m ^ bit];
        }
    }
    return boolean_function(p.n, std::move(a));
}

// The l-th lowest bit of the input weight equals the elementary symmetric
// polynomial of degree 2^(l-1); constant 0 when n < 2^(l-1).
inline anf_polynomial lsb_symmetric(int l, int n) {
    if (l < 1) throw std::invalid_argument("lsb_symmetric: l >= 1 required");
    checked_table_size(n);
    const int d = 1 << (l - 1);
    anf_polynomial p;
    p.n = n;
    if (d > n) return p;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s)
        if (std::popcount(s) == d) p.monomials.push_back(s);
    return p;
}

}  // namespace pfrep
