// Depth-2 protocols for symmetric functions: one first-layer block per
// accepted weight producing signs Z_j with E[Z_j] = cos(pi (w - k) / 2^j)
// for j = 0..floor(log2 n), a second layer computing OR of the flipped signs
// through its own exact representation, and an affine final stage XORing the
// negated block outputs. Simulation enumerates the layer-1 outcome support
// exactly; Z_j is deterministic precisely when (w - k) / 2^j is an integer.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "pfrep/boolean_function.hpp"
#include "pfrep/periodic.hpp"

namespace pfrep {

struct layer1_block {
    int offset = 0;  // target weight; the "appropriate constant term"
};

struct depth2_protocol {
    int n = 0;
    int m = 0;  // floor(log2 n); j ranges over 0..m
    bool or_mode = false;  // accept == {1..n}: single block, output used directly
    std::vector<layer1_block> blocks;
    periodic_representation layer2_rep;   // representation of OR_{m+1}
    std::vector<std::uint8_t> or_table;   // OR of the z bits, read off layer2_rep
    int final_constant = 0;               // XORed into the block parities
};

inline double layer1_expectation(const depth2_protocol& proto, const layer1_block& block, int j,
                                 int weight) {
    return std::cos(M_PI * (weight - block.offset) / static_cast<double>(1 << j));
}

inline depth2_protocol build_symmetric(const symmetric_profile& profile) {
    if (profile.n < 1) throw std::invalid_argument("build_symmetric: n >= 1 required");
    depth2_protocol proto;
    proto.n = profile.n;
    proto.m = std::bit_width(static_cast<unsigned>(profile.n)) - 1;

    std::set<int> full_or;
    for (int w = 1; w <= profile.n; ++w) full_or.insert(w);
    proto.or_mode = profile.accept == full_or;
    if (proto.or_mode) {
        proto.blocks.push_back({0});
        proto.final_constant = 0;
    } else {
        for (int w : profile.accept) proto.blocks.push_back({w});
        proto.final_constant = static_cast<int>(proto.blocks.size()) & 1;
    }

    proto.layer2_rep = from_fourier(make_or(proto.m + 1));
    phase_table_t t = phase_table(proto.layer2_rep);
    proto.or_table.resize(t.scaled.size());
    for (std::size_t z = 0; z < t.scaled.size(); ++z) {
        if (!t.integral(z)) throw std::logic_error("build_symmetric: layer-2 representation not exact");
        proto.or_table[z] = static_cast<std::uint8_t>(t.parity(z));
    }
    return proto;
}

inline std::int64_t qubit_count(const depth2_protocol& proto) {
    const std::int64_t per_block = static_cast<std::int64_t>(proto.m + 1) * proto.n +
                                   (std::int64_t{1} << (proto.m + 1)) - 1;
    return per_block * static_cast<std::int64_t>(proto.blocks.size());
}

struct depth2_support {
    // per block: every layer-1 outcome vector (Z_0..Z_m as +/-1) with
    // positive probability; the joint support is their cartesian product
    std::vector<std::vector<std::vector<int>>> block_outcomes;
    std::set<int> outputs;  // final bits reachable across the support
    std::uint64_t support_size = 1;
};

inline depth2_support simulate_support(const depth2_protocol& proto, const std::vector<std::uint8_t>& x) {
    if (static_cast<int>(x.size()) != proto.n) throw std::invalid_argument("simulate_support: arity mismatch");
    int w = 0;
    for (auto b : x) w += b ? 1 : 0;

    depth2_support result;
    result.outputs.insert(proto.final_constant);
    for (const auto& block : proto.blocks) {
        const int d = w - block.offset;
        // allowed values of Z_j: fixed sign when 2^j divides d, free otherwise
        std::vector<std::vector<int>> choices(proto.m + 1);
        for (int j = 0; j <= proto.m; ++j) {
            if (d % (1 << j) == 0) {
                choices[j] = {((d >> j) & 1) ? -1 : 1};
            } else {
                choices[j] = {1, -1};
            }
        }
        std::vector<std::vector<int>> outcomes;
        std::set<int> or_values;
        std::vector<int> cur(proto.m + 1, 1);
        std::vector<std::size_t> idx(proto.m + 1, 0);
        while (true) {
            for (int j = 0; j <= proto.m; ++j) cur[j] = choices[j][idx[j]];
            std::uint32_t zmask = 0;
            for (int j = 0; j <= proto.m; ++j)
                if (cur[j] == -1) zmask |= std::uint32_t{1} << j;
            or_values.insert(proto.or_table[zmask]);
            outcomes.push_back(cur);
            int j = 0;
            while (j <= proto.m && ++idx[j] == choices[j].size()) idx[j++] = 0;
            if (j > proto.m) break;
        }
        if (result.support_size > std::numeric_limits<std::uint64_t>::max() / outcomes.size()) {
            result.support_size = std::numeric_limits<std::uint64_t>::max();  // saturate
        } else {
            result.support_size *= outcomes.size();
        }
        result.block_outcomes.push_back(std::move(outcomes));

        // final bit = final_constant XOR the block OR bits (the per-block
        // negations are already folded into final_constant)
        std::set<int> next;
        for (int o : result.outputs) {
            for (int b : or_values) next.insert(o ^ b);
        }
        result.outputs = std::move(next);
    }
    return result;
}

inline bool verify_depth2(const depth2_protocol& proto, const boolean_function& f) {
    if (proto.n != f.var_count()) throw std::invalid_argument("verify_depth2: variable count mismatch");
    for (std::uint32_t m = 0; m < f.table_size(); ++m) {
        std::vector<std::uint8_t> x(proto.n);
        for (int i = 0; i < proto.n; ++i) x[i] = (m >> i) & 1;
        depth2_support sup = simulate_support(proto, x);
        if (sup.outputs.size() != 1 || *sup.outputs.begin() != f.value(m)) return false;
    }
    return true;
}

}  // namespace pfrep
