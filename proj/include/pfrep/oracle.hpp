// Exhaustive search for the minimal periodic Fourier sparsity at desk scale.
//
// Soundness and completeness rest on two facts: a representation of sparsity
// s only needs coefficients with floor(log2(s+1)) binary digits, and the
// cosine's period folds every coefficient into [0, 1) (nonempty sets) or
// [0, 2) (empty set). Supports are enumerated in increasing size and
// lexicographic order; grid values ascend, so the returned witness is
// deterministic. The empty-set phase is never enumerated: once all other
// residuals agree it is forced.

#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pfrep/boolean_function.hpp"
#include "pfrep/periodic.hpp"

namespace pfrep {

enum class oracle_status { found, exhausted, budget_exceeded };

struct oracle_options {
    std::int64_t s_max = -1;              // default: 2^n - 1
    std::chrono::milliseconds budget{0};  // 0 = no deadline
};

struct oracle_result {
    oracle_status status = oracle_status::exhausted;
    std::int64_t pfs = -1;
    std::optional<periodic_representation> witness;
};

inline oracle_result brute_force_pfs(const boolean_function& f, oracle_options opt = {}) {
    const int n = f.var_count();
    if (n > 4) throw std::invalid_argument("brute_force_pfs: n <= 4 required");
    const std::size_t inputs = f.table_size();
    const std::int64_t monomial_count = static_cast<std::int64_t>(inputs) - 1;
    if (opt.s_max < 0) opt.s_max = monomial_count;

    if (f.is_constant()) {
        periodic_representation rep;
        rep.n = n;
        rep.set(0, dyadic(f.value(0)));
        return {oracle_status::found, 0, rep};
    }

    const bool has_deadline = opt.budget.count() > 0;
    const auto deadline = std::chrono::steady_clock::now() + opt.budget;
    std::uint64_t tick = 0;
    auto expired = [&]() {
        if (!has_deadline) return false;
        if ((++tick & 0x3ff) != 0) return false;
        return std::chrono::steady_clock::now() > deadline;
    };

    // sign[S][x] = (-1)^{popcount(S & x)}
    std::vector<std::vector<int>> sign(inputs, std::vector<int>(inputs, 1));
    for (std::uint32_t s = 1; s < inputs; ++s)
        for (std::uint32_t x = 0; x < inputs; ++x)
            sign[s][x] = (std::popcount(s & x) & 1) ? -1 : 1;

    const std::int64_t s_cap = std::min<std::int64_t>(opt.s_max, monomial_count);
    for (std::int64_t s = 1; s <= s_cap; ++s) {
        const int k = std::bit_width(static_cast<std::uint64_t>(s + 1)) - 1;
        const int kmask = (1 << (k + 1)) - 1;
        const int vmax = (1 << k) - 1;
        std::vector<int> target(inputs);
        for (std::uint32_t x = 0; x < inputs; ++x) target[x] = f.value(x) << k;

        std::vector<std::uint32_t> support(s);
        for (std::int64_t d = 0; d < s; ++d) support[d] = static_cast<std::uint32_t>(d + 1);

        while (true) {
            if (expired()) return {oracle_status::budget_exceeded, -1, std::nullopt};

            // signature bit d of input x: the sign of support monomial d at x
            std::vector<std::uint32_t> sig(inputs, 0);
            for (std::int64_t d = 0; d < s; ++d)
                for (std::uint32_t x = 0; x < inputs; ++x)
                    if (sign[support[d]][x] < 0) sig[x] |= std::uint32_t{1} << d;

            // Inputs whose signatures agree beyond depth d have a fixed
            // residual difference from depth d on; chain each input to its
            // class predecessor and check the pair once, at the depth where
            // the tie first appears. Depth -1 ties need no assigned values.
            bool feasible = true;
            std::vector<std::vector<std::pair<int, int>>> pairs_at(s);
            for (std::uint32_t x = 0; x < inputs && feasible; ++x) {
                // find the shallowest depth at which x ties to a predecessor
                for (std::int64_t d = -1; d < s; ++d) {
                    std::uint32_t cls = sig[x] >> (d + 1);
                    int last = -1;
                    for (std::uint32_t y = 0; y < x; ++y)
                        if ((sig[y] >> (d + 1)) == cls) last = static_cast<int>(y);
                    if (last < 0) continue;
                    if (d < 0) {
                        // partial sums of the pair always agree, targets must too
                        if (((target[x] - target[last]) & kmask) != 0) feasible = false;
                    } else {
                        pairs_at[d].emplace_back(last, static_cast<int>(x));
                    }
                    break;  // ties at deeper depths follow from this one
                }
            }

            if (feasible) {
                std::vector<int> partial(inputs, 0);
                std::vector<int> value(s, 0);
                std::int64_t depth = 0;
                while (depth >= 0) {
                    if (expired()) return {oracle_status::budget_exceeded, -1, std::nullopt};
                    const int* row = sign[support[depth]].data();
                    if (value[depth] == vmax) {
                        for (std::uint32_t x = 0; x < inputs; ++x) partial[x] -= vmax * row[x];
                        value[depth] = 0;
                        --depth;
                        continue;
                    }
                    ++value[depth];
                    for (std::uint32_t x = 0; x < inputs; ++x) partial[x] += row[x];
                    bool ok = true;
                    for (auto [a, b] : pairs_at[depth]) {
                        if (((target[b] - partial[b] - target[a] + partial[a]) & kmask) != 0) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    if (depth + 1 < s) {
                        ++depth;
                        continue;
                    }
                    // all residuals agree; the forced empty-set phase closes the witness
                    int r = (target[0] - partial[0]) & kmask;
                    periodic_representation rep;
                    rep.n = n;
                    rep.set(0, dyadic(bigint(r), k));
                    for (std::int64_t d = 0; d < s; ++d)
                        rep.set(support[d], dyadic(bigint(value[d]), k));
                    return {oracle_status::found, s, rep};
                }
            }

            // next lexicographic combination of monomial masks
            std::int64_t i = s - 1;
            while (i >= 0 && support[i] == static_cast<std::uint32_t>(monomial_count - (s - 1 - i))) --i;
            if (i < 0) break;
            ++support[i];
            for (std::int64_t j = i + 1; j < s; ++j) support[j] = support[j - 1] + 1;
        }
    }
    return {oracle_status::exhausted, -1, std::nullopt};
}

}  // namespace pfrep
