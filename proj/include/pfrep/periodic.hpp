// Periodic Fourier representations: maps S -> phi_S of dyadic phases with the
// semantics f(x) = cos(pi * sum_S phi_S * prod_{i in S} x_i).
//
// A representation is verified against a truth table by an exact integrality
// and parity check of the phase sum at every input; no floating point is
// involved. Canonical form keeps phi_S in [0, 1) for nonempty S and
// phi_empty in [0, 2): integer parts fold into the empty-set phase because
// (m + r) x^S differs from m + r x^S by the even quantity m (x^S - 1).

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pfrep/anf.hpp"
#include "pfrep/boolean_function.hpp"
#include "pfrep/dyadic.hpp"
#include "pfrep/fourier.hpp"

namespace pfrep {

struct periodic_representation {
    int n = 0;
    std::map<std::uint32_t, dyadic> phi;  // empty-set entry always present

    void set(std::uint32_t s, dyadic v) {
        if (s == 0 || !v.is_zero()) {
            phi[s] = std::move(v);
        } else {
            phi.erase(s);
        }
    }
    dyadic at(std::uint32_t s) const {
        auto it = phi.find(s);
        return it == phi.end() ? dyadic() : it->second;
    }

    friend bool operator==(const periodic_representation&, const periodic_representation&) = default;
};

inline periodic_representation make_rep(int n, std::map<std::uint32_t, dyadic> phi) {
    periodic_representation rep;
    rep.n = n;
    for (auto& [s, v] : phi) {
        if (s >= checked_table_size(n)) throw std::invalid_argument("rep: set not contained in [n]");
        rep.set(s, std::move(v));
    }
    rep.phi.try_emplace(0, dyadic());
    return rep;
}

struct rep_stats_t {
    std::int64_t sparsity = 0;  // nonzero phases over nonempty sets, post-canonicalisation
    int digits = 0;             // max binary digits over all phases, empty set included
};

inline periodic_representation canonicalize(const periodic_representation& rep) {
    periodic_representation out;
    out.n = rep.n;
    dyadic constant = rep.at(0);
    for (const auto& [s, v] : rep.phi) {
        if (s == 0) continue;
        auto [residue, carry] = v.reduce_mod(1);
        constant += dyadic(carry, 0);
        out.set(s, residue);
    }
    out.set(0, constant.reduce_mod(2).first);
    return out;
}

inline rep_stats_t rep_stats(const periodic_representation& rep) {
    periodic_representation c = canonicalize(rep);
    rep_stats_t st;
    for (const auto& [s, v] : c.phi) {
        if (s != 0 && !v.is_zero()) ++st.sparsity;
        st.digits = std::max(st.digits, v.digits());
    }
    return st;
}

// Exact multilinear evaluation of the phase polynomial at one +/-1 point.
inline dyadic phase_sum(const periodic_representation& rep, const std::vector<int>& x) {
    if (static_cast<int>(x.size()) != rep.n) throw std::invalid_argument("phase_sum: arity mismatch");
    dyadic acc;
    for (const auto& [s, v] : rep.phi) {
        int sign = 1;
        for (int i = 0; i < rep.n; ++i)
            if ((s >> i) & 1) sign *= x[i];
        acc += sign == 1 ? v : -v;
    }
    return acc;
}

// Phase sums at all inputs at once, as scaled integers: value at input m is
// scaled[m] / 2^level. Input bit i set means x_i = -1.
struct phase_table_t {
    std::vector<bigint> scaled;
    int level = 0;

    bool integral(std::size_t m) const {
        if (level == 0) return true;
        return (scaled[m] & ((bigint(1) << level) - 1)) == 0;
    }
    int parity(std::size_t m) const {
        return static_cast<int>(floor_div_pow2(scaled[m], level) & 1);
    }
    dyadic value(std::size_t m) const { return dyadic(scaled[m], level); }
};

inline phase_table_t phase_table(const periodic_representation& rep) {
    const std::size_t size = checked_table_size(rep.n);
    phase_table_t t;
    for (const auto& [s, v] : rep.phi) t.level = std::max(t.level, v.den_pow());
    t.scaled.assign(size, bigint(0));
    for (const auto& [s, v] : rep.phi)
        t.scaled[s] = v.num() << static_cast<unsigned>(t.level - v.den_pow());
    wht_butterfly(t.scaled);
    return t;
}

struct verification_report {
    bool ok = false;
    std::optional<std::vector<std::uint8_t>> witness;  // first failing input, if any
    std::int64_t sparsity = 0;
    int digits = 0;
};

// ok iff at every input the phase sum is an integer whose parity is the
// function's output bit (so cos(pi * phase) reproduces the +/-1 value).
inline verification_report verify(const periodic_representation& rep, const boolean_function& f) {
    if (rep.n != f.var_count()) throw std::invalid_argument("verify: variable count mismatch");
    verification_report report;
    rep_stats_t st = rep_stats(rep);
    report.sparsity = st.sparsity;
    report.digits = st.digits;
    phase_table_t table = phase_table(rep);
    for (std::uint32_t m = 0; m < f.table_size(); ++m) {
        if (!table.integral(m) || table.parity(m) != f.value(m)) {
            std::vector<std::uint8_t> w(rep.n);
            for (int i = 0; i < rep.n; ++i) w[i] = (m >> i) & 1;
            report.witness = std::move(w);
            return report;
        }
    }
    report.ok = true;
    return report;
}

// The Boolean function a representation computes, when its phase sums are
// integral everywhere.
inline std::optional<boolean_function> implied_function(const periodic_representation& rep) {
    phase_table_t t = phase_table(rep);
    std::vector<std::uint8_t> bits(t.scaled.size());
    for (std::size_t m = 0; m < t.scaled.size(); ++m) {
        if (!t.integral(m)) return std::nullopt;
        bits[m] = static_cast<std::uint8_t>(t.parity(m));
    }
    return boolean_function(rep.n, std::move(bits));
}

// --- constructions ---

// From the Fourier expansion, via sin(pi t) = cos(pi (t - 1/2)):
// phi_S = \hat f(S)/2, with 1/2 subtracted from the empty-set phase.
inline periodic_representation from_fourier(const boolean_function& f) {
    fourier_spectrum spec = wht(f);
    periodic_representation rep;
    rep.n = f.var_count();
    for (const auto& [s, c] : spec.coeffs) rep.set(s, c.scale_pow2(-1));
    rep.set(0, rep.at(0) - dyadic(bigint(1), 1));
    return canonicalize(rep);
}

// From the F2 polynomial: phi_S = (-1)^{|S|} sum_{T >= S} c_T / 2^{|T|}.
inline periodic_representation from_anf(const boolean_function& f) {
    anf_polynomial p = moebius(f);
    const int n = f.var_count();
    const std::size_t size = checked_table_size(n);
    std::vector<std::int64_t> a(size, 0);
    for (auto s : p.monomials) a[s] = std::int64_t{1} << (n - std::popcount(s));
    for (std::size_t bit = 1; bit < size; bit <<= 1) {
        for (std::size_t m = 0; m < size; ++m) {
            if (!(m & bit)) a[m] += a[m | bit];  // superset sums
        }
    }
    periodic_representation rep;
    rep.n = n;
    for (std::uint32_t s = 0; s < size; ++s) {
        if (a[s] == 0) continue;
        bigint num = (std::popcount(s) & 1) ? bigint(-a[s]) : bigint(a[s]);
        rep.set(s, dyadic(num, n));
    }
    rep.phi.try_emplace(0, dyadic());
    return canonicalize(rep);
}

// --- the Z/4Z construction ---

// Truth table of LSB^2 of the integer polynomial sum c_S * prod_{i in S} x_i.
inline boolean_function mod4_target(int n, const std::map<std::uint32_t, int>& c) {
    const std::size_t size = checked_table_size(n);
    std::vector<std::uint8_t> t(size);
    for (std::uint32_t m = 0; m < size; ++m) {
        long long v = 0;
        for (const auto& [s, cs] : c)
            if ((s & m) == s) v += cs;
        t[m] = static_cast<std::uint8_t>((v >> 1) & 1);
    }
    return boolean_function(n, std::move(t));
}

// Representation of LSB^2 of an integer polynomial with c_S in {0,1,2,3}:
// the mod-2 part is cancelled through the Fourier expansion of the parity
// function g of the same polynomial.
inline periodic_representation from_mod4(int n, const std::map<std::uint32_t, int>& c) {
    const std::size_t size = checked_table_size(n);
    for (const auto& [s, cs] : c) {
        if (s >= size) throw std::invalid_argument("from_mod4: set not contained in [n]");
        if (cs < 0 || cs > 3) throw std::invalid_argument("from_mod4: coefficients must be in {0,1,2,3}");
    }
    // g = polynomial mod 2, as a Boolean function
    std::vector<std::uint8_t> gt(size);
    for (std::uint32_t m = 0; m < size; ++m) {
        int v = 0;
        for (const auto& [s, cs] : c)
            if ((s & m) == s) v += cs;
        gt[m] = static_cast<std::uint8_t>(v & 1);
    }
    fourier_spectrum ghat = wht(boolean_function(n, std::move(gt)));

    // superset sums of c_S * 2^{n-|S|}
    std::vector<std::int64_t> a(size, 0);
    for (const auto& [s, cs] : c) a[s] = static_cast<std::int64_t>(cs) << (n - std::popcount(s));
    for (std::size_t bit = 1; bit < size; bit <<= 1) {
        for (std::size_t m = 0; m < size; ++m) {
            if (!(m & bit)) a[m] += a[m | bit];
        }
    }

    periodic_representation rep;
    rep.n = n;
    for (std::uint32_t s = 0; s < size; ++s) {
        bigint num = (std::popcount(s) & 1) ? bigint(-a[s]) : bigint(a[s]);
        dyadic v(num, n + 1);  // (1/2) * sum / 2^n
        auto it = ghat.coeffs.find(s);
        if (it != ghat.coeffs.end()) v += it->second.scale_pow2(-2);
        if (s == 0) v -= dyadic(bigint(1), 2);
        rep.set(s, v);
    }
    rep.phi.try_emplace(0, dyadic());
    rep = canonicalize(rep);
    if (!verify(rep, mod4_target(n, c)).ok) throw std::logic_error("from_mod4: construction failed to verify");
    return rep;
}

// --- named recipes ---

// CQ_n as LSB^2 of the plain weight: sparsity n+1, two binary digits.
inline periodic_representation cq_recipe(int n) {
    if (n < 1) throw std::invalid_argument("cq_recipe: n >= 1 required");
    std::map<std::uint32_t, int> c;
    for (int i = 0; i < n; ++i) c[std::uint32_t{1} << i] = 1;
    return from_mod4(n, c);
}

// The same representation written directly over input bits, before folding:
// phase = (1/2)(sum_i (1-x_i)/2 - (1 - prod_i x_i)/2). Kept un-canonical on
// purpose; the complete-cubic recipe multiplies these raw polynomials.
inline periodic_representation cq_raw_rep(int n) {
    if (n < 1) throw std::invalid_argument("cq_raw_rep: n >= 1 required");
    periodic_representation rep;
    rep.n = n;
    const std::uint32_t full = static_cast<std::uint32_t>(checked_table_size(n) - 1);
    rep.set(0, dyadic(bigint(n - 1), 2));
    for (int i = 0; i < n; ++i) rep.set(std::uint32_t{1} << i, dyadic(bigint(-1), 2));
    rep.set(full, rep.at(full) + dyadic(bigint(1), 2));
    rep.phi.try_emplace(0, dyadic());
    return rep;
}

// XOR_n as (1 - prod x_i)/2, un-canonical form.
inline periodic_representation xor_raw_rep(int n) {
    if (n < 1) throw std::invalid_argument("xor_raw_rep: n >= 1 required");
    periodic_representation rep;
    rep.n = n;
    const std::uint32_t full = static_cast<std::uint32_t>(checked_table_size(n) - 1);
    rep.set(0, dyadic(bigint(1), 1));
    rep.set(full, dyadic(bigint(-1), 1));
    return rep;
}

// Canonical single-monomial XOR_n representation.
inline periodic_representation xor_rep(int n) { return canonicalize(xor_raw_rep(n)); }

// --- combinators ---

namespace detail {
inline void require_total(const periodic_representation& rep, const char* op) {
    if (!implied_function(rep).has_value()) {
        throw std::invalid_argument(std::string(op) + ": input representation does not verify");
    }
}
}  // namespace detail

// AND of the represented functions: multiply the phase polynomials as
// multilinear polynomials (x_i^2 = 1 merges monomials by symmetric
// difference), then canonicalize.
inline periodic_representation and_combine(const std::vector<periodic_representation>& reps) {
    if (reps.empty()) throw std::invalid_argument("and_combine: at least one representation required");
    for (const auto& r : reps) {
        if (r.n != reps.front().n) throw std::invalid_argument("and_combine: variable count mismatch");
        detail::require_total(r, "and_combine");
    }
    std::map<std::uint32_t, dyadic> acc = reps.front().phi;
    for (std::size_t j = 1; j < reps.size(); ++j) {
        std::map<std::uint32_t, dyadic> next;
        for (const auto& [s, a] : acc) {
            for (const auto& [t, b] : reps[j].phi) {
                dyadic prod = a * b;
                if (prod.is_zero()) continue;
                auto [it, inserted] = next.try_emplace(s ^ t, prod);
                if (!inserted) it->second += prod;
            }
        }
        acc = std::move(next);
    }
    return canonicalize(make_rep(reps.front().n, std::move(acc)));
}

// XOR of the represented functions: add the phase polynomials.
inline periodic_representation xor_combine(const std::vector<periodic_representation>& reps) {
    if (reps.empty()) throw std::invalid_argument("xor_combine: at least one representation required");
    std::map<std::uint32_t, dyadic> acc;
    for (const auto& r : reps) {
        if (r.n != reps.front().n) throw std::invalid_argument("xor_combine: variable count mismatch");
        detail::require_total(r, "xor_combine");
        for (const auto& [s, v] : r.phi) {
            auto [it, inserted] = acc.try_emplace(s, v);
            if (!inserted) it->second += v;
        }
    }
    return canonicalize(make_rep(reps.front().n, std::move(acc)));
}

// Complete cubic via the AND combinator on the raw CQ and XOR polynomials.
inline periodic_representation c3_recipe(int n) {
    if (n < 1) throw std::invalid_argument("c3_recipe: n >= 1 required");
    return and_combine({cq_raw_rep(n), xor_raw_rep(n)});
}

// Best available lower bound on the periodic Fourier sparsity:
// 2^deg_F2 - 1 always, the Fourier dimension always (linear sketches), and
// dimension + 1 once the degree is at least 2.
inline std::int64_t lower_bound(const boolean_function& f) {
    if (f.is_constant()) throw std::invalid_argument("lower_bound: constant function");
    int deg = deg_f2(moebius(f));
    int dim = dimension(wht(f));
    std::int64_t best = (std::int64_t{1} << deg) - 1;
    best = std::max(best, static_cast<std::int64_t>(dim));
    if (deg >= 2) best = std::max(best, static_cast<std::int64_t>(dim) + 1);
    return best;
}

}  // namespace pfrep
