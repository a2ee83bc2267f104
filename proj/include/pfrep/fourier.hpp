// Exact Walsh-Hadamard spectra of the +/-1 view of a Boolean function,
// spectral statistics (sparsity, degree, F2-dimension of the support), and
// the closed-form Mod^3 spectrum.

#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "pfrep/boolean_function.hpp"
#include "pfrep/dyadic.hpp"

namespace pfrep {

struct fourier_spectrum {
    int n = 0;
    std::map<std::uint32_t, dyadic> coeffs;  // only nonzero entries; key is the subset mask
};

// In-place unnormalised transform: a[m] <- sum_S a[S] * (-1)^{popcount(S & m)}.
// Self-inverse up to the factor 2^n.
template <typename Int>
inline void wht_butterfly(std::vector<Int>& a) {
    const std::size_t size = a.size();
    for (std::size_t half = 1; half < size; half <<= 1) {
        for (std::size_t base = 0; base < size; base += 2 * half) {
            for (std::size_t i = base; i < base + half; ++i) {
                Int u = a[i], v = a[i + half];
                a[i] = u + v;
                a[i + half] = u - v;
            }
        }
    }
}

inline fourier_spectrum wht(const boolean_function& f) {
    const std::size_t size = f.table_size();
    std::vector<std::int64_t> a(size);
    for (std::uint32_t m = 0; m < size; ++m) a[m] = f.sign_value(m);
    wht_butterfly(a);
    fourier_spectrum spec;
    spec.n = f.var_count();
    for (std::uint32_t s = 0; s < size; ++s) {
        if (a[s] != 0) spec.coeffs.emplace(s, dyadic(bigint(a[s]), f.var_count()));
    }
    return spec;
}

struct spectrum_stats {
    std::int64_t sparsity = 0;           // nonzero coefficients, empty set included
    std::int64_t nonempty_sparsity = 0;  // nonzero coefficients over nonempty sets
    int degree = 0;                      // max |S| with nonzero coefficient
};

inline spectrum_stats stats(const fourier_spectrum& spec) {
    spectrum_stats st;
    for (const auto& [s, c] : spec.coeffs) {
        ++st.sparsity;
        if (s != 0) ++st.nonempty_sparsity;
        st.degree = std::max(st.degree, std::popcount(s));
    }
    return st;
}

// Rank over F2 of the indicator vectors of the spectral support.
inline int dimension(const fourier_spectrum& spec) {
    std::vector<std::uint32_t> basis;
    for (const auto& [s, c] : spec.coeffs) {
        std::uint32_t v = s;
        for (auto b : basis) v = std::min(v, v ^ b);
        if (v != 0) basis.push_back(v);
    }
    return static_cast<int>(basis.size());
}

// Multilinear evaluation at a +/-1 point.
inline dyadic reconstruct(const fourier_spectrum& spec, const std::vector<int>& x) {
    if (static_cast<int>(x.size()) != spec.n) throw std::invalid_argument("reconstruct: arity mismatch");
    dyadic acc;
    for (const auto& [s, c] : spec.coeffs) {
        int sign = 1;
        for (int i = 0; i < spec.n; ++i)
            if ((s >> i) & 1) sign *= x[i];
        acc += sign == 1 ? c : -c;
    }
    return acc;
}

// Evaluation at every point at once via the butterfly; index m encodes the
// input whose i-th bit set means x_i = -1.
inline std::vector<dyadic> reconstruct_table(const fourier_spectrum& spec) {
    const std::size_t size = checked_table_size(spec.n);
    int level = 0;
    for (const auto& [s, c] : spec.coeffs) level = std::max(level, c.den_pow());
    std::vector<bigint> a(size, bigint(0));
    for (const auto& [s, c] : spec.coeffs) a[s] = c.num() << static_cast<unsigned>(level - c.den_pow());
    wht_butterfly(a);
    std::vector<dyadic> out(size);
    for (std::size_t m = 0; m < size; ++m) out[m] = dyadic(a[m], level);
    return out;
}

// Closed-form spectrum of Mod^3_n, one branch per residue of n mod 3.
// All coefficients share the denominator 3 * 2^(n-2) or 3 * 2^(n-1); the
// factor 3 always cancels exactly.
inline fourier_spectrum mod3_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("mod3_closed_form: n >= 1 required");
    const std::size_t size = checked_table_size(n);
    fourier_spectrum spec;
    spec.n = n;
    auto emit = [&](std::uint32_t s, const bigint& three_num, int den_pow) {
        // coefficient = three_num / (3 * 2^den_pow); three_num is divisible by 3
        bigint q = three_num / 3;
        if (q * 3 != three_num) throw std::logic_error("mod3_closed_form: non-cancelling factor 3");
        if (q != 0) spec.coeffs.emplace(s, dyadic(q, den_pow));
    };
    if (n % 3 == 0) {
        // 1/3 + ((-1)^{n+1} / (3 * 2^{n-2})) * sum over even |S| of (-3)^{|S|/2} x^S
        int sign = (n % 2 == 0) ? -1 : 1;
        for (std::uint32_t s = 0; s < size; ++s) {
            int sz = std::popcount(s);
            if (sz & 1) continue;
            bigint term = sign;
            for (int j = 0; j < sz / 2; ++j) term *= -3;
            if (s == 0) term += bigint(1) << (n - 2);  // the standalone 1/3
            emit(s, term, n - 2);
        }
    } else {
        // 1/3 + ((-1)^n / (3 * 2^{n-1})) * sum_S sigma(|S|) (-1)^{floor(|S|/2)} 3^{ceil(|S|/2)} x^S
        // where sigma flips the odd-size sign for n = 2 (mod 3).
        int sign = (n % 2 == 0) ? 1 : -1;
        for (std::uint32_t s = 0; s < size; ++s) {
            int sz = std::popcount(s);
            bigint term = sign * (((sz / 2) % 2 == 0) ? 1 : -1);
            for (int j = 0; j < (sz + 1) / 2; ++j) term *= 3;
            if ((sz & 1) && n % 3 == 2) term = -term;
            if (s == 0) term += bigint(1) << (n - 1);
            emit(s, term, n - 1);
        }
    }
    return spec;
}

}  // namespace pfrep
