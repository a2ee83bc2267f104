// XOR games and single-layer protocols on shared GHZ states: the Werner-Wolf
// bias, derivative-free phase optimisation, the exact classical baseline,
// promise games on modular weight classes, and output-distribution
// simulation of protocols derived from verified representations.
//
// Phase convention: bias = sum_z mu(z) h(z) cos(pi (phi_0 + sum_i phi_i z_i))
// with z_i in {+1, -1}. Helpers convert phases written against the {0,1} bit
// values (phi_0' = phi_0 + sum phi_i / 2, phi_i' = -phi_i / 2).

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "pfrep/boolean_function.hpp"
#include "pfrep/dyadic.hpp"
#include "pfrep/periodic.hpp"

namespace pfrep {

struct xor_game {
    struct entry {
        std::vector<int> z;  // +/-1 values, one per player
        int h = 1;           // +/-1 target correlation
        double mu = 0.0;     // probability weight
    };
    int players = 0;
    std::vector<entry> entries;  // the support of mu
};

inline void validate_game(const xor_game& game) {
    if (game.players < 1) throw std::invalid_argument("xor_game: at least one player");
    double total = 0.0;
    for (const auto& e : game.entries) {
        if (static_cast<int>(e.z.size()) != game.players) throw std::invalid_argument("xor_game: entry arity mismatch");
        for (int zi : e.z)
            if (zi != 1 && zi != -1) throw std::invalid_argument("xor_game: z values must be +/-1");
        if (e.h != 1 && e.h != -1) throw std::invalid_argument("xor_game: predicate values must be +/-1");
        if (e.mu < 0) throw std::invalid_argument("xor_game: negative weight");
        total += e.mu;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("xor_game: weights must sum to 1");
}

// Total game: every input of f, uniformly weighted, z = the +/-1 input itself.
inline xor_game uniform_game(const boolean_function& f) {
    xor_game game;
    game.players = f.var_count();
    const double w = 1.0 / static_cast<double>(f.table_size());
    for (std::uint32_t m = 0; m < f.table_size(); ++m) {
        xor_game::entry e;
        e.z.resize(game.players);
        for (int i = 0; i < game.players; ++i) e.z[i] = ((m >> i) & 1) ? -1 : 1;
        e.h = f.sign_value(m);
        e.mu = w;
        game.entries.push_back(std::move(e));
    }
    return game;
}

inline double quantum_bias(const xor_game& game, const std::vector<double>& phases) {
    if (static_cast<int>(phases.size()) != game.players + 1) {
        throw std::invalid_argument("quantum_bias: k+1 phases required");
    }
    double bias = 0.0;
    for (const auto& e : game.entries) {
        double t = phases[0];
        for (int i = 0; i < game.players; ++i) t += phases[i + 1] * e.z[i];
        bias += e.mu * e.h * std::cos(M_PI * t);
    }
    return bias;
}

inline std::vector<double> bit_form_to_sign_form(const std::vector<double>& bit_phases) {
    std::vector<double> out(bit_phases.size());
    double shift = 0.0;
    for (std::size_t i = 1; i < bit_phases.size(); ++i) {
        out[i] = -bit_phases[i] / 2.0;
        shift += bit_phases[i] / 2.0;
    }
    out[0] = bit_phases[0] + shift;
    return out;
}

struct optimize_options {
    int restarts = 32;
    int max_sweeps = 200;
    double tol = 1e-9;
    std::uint64_t seed = 0;
};

struct optimize_result {
    std::vector<double> phases;
    double bias = -1.0;
};

// Multi-start coordinate ascent. Along one coordinate the bias is a pure
// sinusoid of period 2, so a coarse scan plus golden-section refinement of
// the best bracket finds the coordinate maximum; sweeps stop once a full
// pass gains less than tol. The reported bias is achieved by the returned
// phases, hence a certified lower bound on the true maximum.
inline optimize_result optimize_bias(const xor_game& game, optimize_options opt = {}) {
    validate_game(game);
    const int dim = game.players + 1;
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unif(0.0, 2.0);

    auto line_max = [&](std::vector<double>& phases, int coord) {
        constexpr int grid = 32;
        double best_t = phases[coord], best_v;
        {
            best_v = quantum_bias(game, phases);
            for (int g = 0; g < grid; ++g) {
                phases[coord] = 2.0 * g / grid;
                double v = quantum_bias(game, phases);
                if (v > best_v) {
                    best_v = v;
                    best_t = phases[coord];
                }
            }
        }
        double lo = best_t - 2.0 / grid, hi = best_t + 2.0 / grid;
        constexpr double inv_phi = 0.6180339887498949;
        double a = hi - (hi - lo) * inv_phi, b = lo + (hi - lo) * inv_phi;
        auto eval = [&](double t) {
            phases[coord] = t;
            return quantum_bias(game, phases);
        };
        double fa = eval(a), fb = eval(b);
        for (int it = 0; it < 60; ++it) {
            if (fa < fb) {
                lo = a;
                a = b;
                fa = fb;
                b = lo + (hi - lo) * inv_phi;
                fb = eval(b);
            } else {
                hi = b;
                b = a;
                fb = fa;
                a = hi - (hi - lo) * inv_phi;
                fa = eval(a);
            }
        }
        double mid = (lo + hi) / 2;
        double fm = eval(mid);
        if (fm > best_v) return fm;  // strict: ties keep the incumbent phase
        phases[coord] = best_t;
        return best_v;
    };

    optimize_result best;
    for (int r = 0; r < std::max(1, opt.restarts); ++r) {
        std::vector<double> phases(dim, 0.0);
        if (r > 0)
            for (auto& p : phases) p = unif(rng);
        double current = quantum_bias(game, phases);
        for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
            double before = current;
            for (int c = 0; c < dim; ++c) current = line_max(phases, c);
            if (current - before < opt.tol) break;
        }
        if (current > best.bias) {
            best.bias = current;
            best.phases = phases;
        }
    }
    return best;
}

// Exact classical maximum. Every deterministic local strategy a_i with
// a_i(z) in {+1, -1, z, -z} makes the product collapse to +/- a single
// parity of the z's, so it suffices to scan all 2^k parities.
inline double classical_bias(const xor_game& game) {
    validate_game(game);
    if (game.players > 12) throw std::invalid_argument("classical_bias: k <= 12 required");
    double best = -1.0;
    for (std::uint32_t b = 0; b < (std::uint32_t{1} << game.players); ++b) {
        double corr = 0.0;
        for (const auto& e : game.entries) {
            int sign = 1;
            for (int i = 0; i < game.players; ++i)
                if ((b >> i) & 1) sign *= e.z[i];
            corr += e.mu * e.h * sign;
        }
        best = std::max(best, std::abs(corr));
    }
    return best;
}

struct nmqc_protocol {
    int n = 0;                            // hidden input bits
    std::vector<std::uint32_t> parity_sets;  // one parity per qubit
    std::vector<double> phases;              // phi_0, phi_1, ..., phi_k (sign form)
    std::optional<std::vector<dyadic>> exact_phases;  // same, when dyadic

    int qubits() const { return static_cast<int>(parity_sets.size()); }
};

// The protocol behind a verified representation: one qubit per nonempty
// monomial, measured along the corresponding parity.
inline nmqc_protocol protocol_from_rep(const periodic_representation& rep) {
    if (!implied_function(rep).has_value()) {
        throw std::invalid_argument("protocol_from_rep: representation does not verify");
    }
    periodic_representation c = canonicalize(rep);
    nmqc_protocol proto;
    proto.n = c.n;
    std::vector<dyadic> exact{c.at(0)};
    proto.phases.push_back(c.at(0).to_double());
    for (const auto& [s, v] : c.phi) {
        if (s == 0 || v.is_zero()) continue;
        proto.parity_sets.push_back(s);
        exact.push_back(v);
        proto.phases.push_back(v.to_double());
    }
    proto.exact_phases = std::move(exact);
    return proto;
}

struct output_distribution {
    double p_one = 0.0;
    bool deterministic = false;
};

// Probability that the parity of all measurement outcomes is 1:
// (1 - cos(pi * phase sum at x)) / 2, exact whenever the phases are dyadic
// and the phase sum integral.
inline output_distribution simulate(const nmqc_protocol& proto, const std::vector<std::uint8_t>& x) {
    if (static_cast<int>(x.size()) != proto.n) throw std::invalid_argument("simulate: arity mismatch");
    std::uint32_t m = 0;
    for (int i = 0; i < proto.n; ++i) m |= static_cast<std::uint32_t>(x[i] ? 1 : 0) << i;
    std::vector<int> z(proto.qubits());
    for (int i = 0; i < proto.qubits(); ++i) z[i] = (std::popcount(m & proto.parity_sets[i]) & 1) ? -1 : 1;

    if (proto.exact_phases) {
        dyadic t = (*proto.exact_phases)[0];
        for (int i = 0; i < proto.qubits(); ++i) {
            const dyadic& p = (*proto.exact_phases)[i + 1];
            t += z[i] == 1 ? p : -p;
        }
        if (auto parity = t.integer_parity()) {
            return {static_cast<double>(*parity), true};
        }
        return {(1.0 - std::cos(M_PI * t.to_double())) / 2.0, false};
    }
    double t = proto.phases[0];
    for (int i = 0; i < proto.qubits(); ++i) t += proto.phases[i + 1] * z[i];
    return {(1.0 - std::cos(M_PI * t)) / 2.0, false};
}

struct promise_game {
    xor_game game;
    nmqc_protocol protocol;
    std::optional<periodic_representation> exact_rep;  // present when k is a power of two
};

// Partial function on the weight classes 0 and k mod 2k, won with bias 1 by
// n qubits measured with phases 1/k. The phases are dyadic exactly when k is
// a power of two.
inline promise_game promise_mod_game(int k, int n) {
    if (k < 2) throw std::invalid_argument("promise_mod_game: k >= 2 required");
    if (n < k) throw std::invalid_argument("promise_mod_game: n >= k required");
    checked_table_size(n);
    promise_game out;
    out.game.players = n;
    std::vector<std::uint32_t> support;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        int w = std::popcount(m) % (2 * k);
        if (w == 0 || w == k) support.push_back(m);
    }
    if (support.empty()) throw std::invalid_argument("promise_mod_game: empty promise set");
    const double mu = 1.0 / static_cast<double>(support.size());
    for (auto m : support) {
        xor_game::entry e;
        e.z.resize(n);
        for (int i = 0; i < n; ++i) e.z[i] = ((m >> i) & 1) ? -1 : 1;
        e.h = (std::popcount(m) % (2 * k) == 0) ? 1 : -1;
        e.mu = mu;
        out.game.entries.push_back(std::move(e));
    }

    out.protocol.n = n;
    out.protocol.phases.push_back(static_cast<double>(n) / (2.0 * k));
    for (int i = 0; i < n; ++i) {
        out.protocol.parity_sets.push_back(std::uint32_t{1} << i);
        out.protocol.phases.push_back(-1.0 / (2.0 * k));
    }
    if (std::has_single_bit(static_cast<unsigned>(k))) {
        const int kp = std::countr_zero(static_cast<unsigned>(k));
        std::vector<dyadic> exact{dyadic(bigint(n), kp + 1)};
        periodic_representation rep;
        rep.n = n;
        rep.set(0, exact[0]);
        for (int i = 0; i < n; ++i) {
            exact.push_back(dyadic(bigint(-1), kp + 1));
            rep.set(std::uint32_t{1} << i, exact.back());
        }
        out.protocol.exact_phases = std::move(exact);
        out.exact_rep = canonicalize(rep);
    }
    return out;
}

// --- distributive identities over XORed shares ---

enum class distributive_identity { and2, maj3, cqm };

namespace detail {
inline int cq_bit(int weight) { return (weight >> 1) & 1; }
}  // namespace detail

// Checks the share-splitting identities that let several parties evaluate
// quadratic functions of XORed inputs through complete-quadratic terms only.
inline bool check_distributive_identity(distributive_identity which, int n, int m = 0) {
    if (n < 1) throw std::invalid_argument("check_distributive_identity: n >= 1 required");
    switch (which) {
        case distributive_identity::and2: {
            if (2 * n > 12) throw std::invalid_argument("check_distributive_identity: total variables <= 12");
            for (std::uint32_t v = 0; v < (std::uint32_t{1} << (2 * n)); ++v) {
                std::uint32_t x1 = v & ((1u << n) - 1), x2 = v >> n;
                int lhs = (std::popcount(x1) & 1) & (std::popcount(x2) & 1);
                int rhs = detail::cq_bit(std::popcount(v)) ^ detail::cq_bit(std::popcount(x1)) ^
                          detail::cq_bit(std::popcount(x2));
                if (lhs != rhs) return false;
            }
            return true;
        }
        case distributive_identity::maj3: {
            if (3 * n > 12) throw std::invalid_argument("check_distributive_identity: total variables <= 12");
            for (std::uint32_t v = 0; v < (std::uint32_t{1} << (3 * n)); ++v) {
                std::uint32_t x = v & ((1u << n) - 1);
                std::uint32_t y = (v >> n) & ((1u << n) - 1);
                std::uint32_t z = v >> (2 * n);
                int px = std::popcount(x) & 1, py = std::popcount(y) & 1, pz = std::popcount(z) & 1;
                int lhs = (px + py + pz >= 2) ? 1 : 0;
                int rhs = detail::cq_bit(std::popcount(x) + std::popcount(y)) ^
                          detail::cq_bit(std::popcount(y) + std::popcount(z)) ^
                          detail::cq_bit(std::popcount(z) + std::popcount(x));
                if (lhs != rhs) return false;
            }
            return true;
        }
        case distributive_identity::cqm: {
            if (m < 1) throw std::invalid_argument("check_distributive_identity: m >= 1 required");
            if (m * n > 12) throw std::invalid_argument("check_distributive_identity: total variables <= 12");
            for (std::uint32_t v = 0; v < (std::uint32_t{1} << (m * n)); ++v) {
                int parity_weight = 0;  // weight of the m XORed shares
                int rhs = detail::cq_bit(std::popcount(v));
                for (int j = 0; j < m; ++j) {
                    std::uint32_t block = (v >> (j * n)) & ((1u << n) - 1);
                    parity_weight += std::popcount(block) & 1;
                    rhs ^= detail::cq_bit(std::popcount(block));
                }
                if (detail::cq_bit(parity_weight) != rhs) return false;
            }
            return true;
        }
    }
    throw std::invalid_argument("check_distributive_identity: unknown identity");
}

}  // namespace pfrep
