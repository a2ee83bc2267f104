// Randomized phase families for bounded-error protocols: pointwise and
// distributional error checks against a target function, and the reduction
// from a digits-bounded phase family to a probabilistic F2-polynomial whose
// stage polynomials y_0..y_ell are the binary digits of the shifted phase
// sum. The threshold randomness is never sampled; each atom splits into
// finitely many polynomial outcomes whose weights are the cosine mixture
// probabilities.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "pfrep/anf.hpp"
#include "pfrep/boolean_function.hpp"
#include "pfrep/dyadic.hpp"
#include "pfrep/periodic.hpp"

namespace pfrep {

struct phase_atom {
    double weight = 1.0;
    periodic_representation phases;
};

struct randomized_phase_family {
    int n = 0;
    std::vector<phase_atom> atoms;
};

inline void validate_family(const randomized_phase_family& family) {
    double total = 0.0;
    for (const auto& a : family.atoms) {
        if (a.weight < 0) throw std::invalid_argument("phase family: negative weight");
        if (a.phases.n != family.n) throw std::invalid_argument("phase family: arity mismatch");
        total += a.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("phase family: weights must sum to 1");
}

inline randomized_phase_family single_atom_family(const periodic_representation& rep) {
    return {rep.n, {phase_atom{1.0, rep}}};
}

// Nonempty monomials used by any atom.
inline std::vector<std::uint32_t> family_support(const randomized_phase_family& family) {
    std::set<std::uint32_t> sup;
    for (const auto& a : family.atoms)
        for (const auto& [s, v] : a.phases.phi)
            if (s != 0 && !v.is_zero()) sup.insert(s);
    return {sup.begin(), sup.end()};
}

// E[cos(pi Phi(x))] at every input; index bit i set means x_i = -1.
inline std::vector<double> expected_table(const randomized_phase_family& family) {
    validate_family(family);
    std::vector<double> out(checked_table_size(family.n), 0.0);
    for (const auto& a : family.atoms) {
        phase_table_t t = phase_table(a.phases);
        for (std::size_t m = 0; m < out.size(); ++m) {
            out[m] += a.weight * std::cos(M_PI * t.value(m).to_double());
        }
    }
    return out;
}

inline double expected_value(const randomized_phase_family& family, const std::vector<std::uint8_t>& x) {
    if (static_cast<int>(x.size()) != family.n) throw std::invalid_argument("expected_value: arity mismatch");
    std::uint32_t m = 0;
    for (int i = 0; i < family.n; ++i) m |= static_cast<std::uint32_t>(x[i] ? 1 : 0) << i;
    return expected_table(family)[m];
}

// |f(x) - E cos| <= 2 eps at every input.
inline bool check_pointwise_error(const randomized_phase_family& family, const boolean_function& f,
                                  double eps) {
    if (eps < 0 || eps >= 0.5) throw std::invalid_argument("check_pointwise_error: eps in [0, 1/2)");
    if (family.n != f.var_count()) throw std::invalid_argument("check_pointwise_error: arity mismatch");
    std::vector<double> g = expected_table(family);
    for (std::uint32_t m = 0; m < f.table_size(); ++m) {
        if (std::abs(f.sign_value(m) - g[m]) > 2 * eps + 1e-12) return false;
    }
    return true;
}

// E_{x ~ mu} |f(x) - g(x)| <= 2 eps.
inline bool check_distribution_error(const randomized_phase_family& family, const boolean_function& f,
                                     const std::vector<double>& mu, double eps) {
    if (eps < 0 || eps >= 0.5) throw std::invalid_argument("check_distribution_error: eps in [0, 1/2)");
    if (family.n != f.var_count()) throw std::invalid_argument("check_distribution_error: arity mismatch");
    if (mu.size() != f.table_size()) throw std::invalid_argument("check_distribution_error: mu has wrong size");
    double total = 0.0;
    for (double w : mu) {
        if (w < 0) throw std::invalid_argument("check_distribution_error: negative weight in mu");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("check_distribution_error: mu must sum to 1");
    std::vector<double> g = expected_table(family);
    double err = 0.0;
    for (std::uint32_t m = 0; m < f.table_size(); ++m) err += mu[m] * std::abs(f.sign_value(m) - g[m]);
    return err <= 2 * eps + 1e-12;
}

struct probabilistic_polynomial {
    struct out_atom {
        double weight = 0.0;
        anf_polynomial poly;
    };
    struct atom_detail {
        double weight = 0.0;
        std::vector<anf_polynomial> y;  // y_0 .. y_ell
    };
    int n = 0;
    int ell = 0;
    std::vector<out_atom> atoms;
    std::vector<atom_detail> details;  // one per input atom
};

// Reduce a dyadic phase family with at most ell binary digits to a
// probabilistic polynomial of F2-degree at most 2^ell - 1. Atoms are
// canonicalized first so their coefficient sums are nonnegative and the
// shift k = ceil(sum phi_S / 2) is valid.
inline probabilistic_polynomial to_probabilistic_polynomial(const randomized_phase_family& family, int ell = -1) {
    validate_family(family);
    std::vector<periodic_representation> canon;
    int digits = 0;
    for (const auto& a : family.atoms) {
        canon.push_back(canonicalize(a.phases));
        digits = std::max(digits, rep_stats(canon.back()).digits);
    }
    if (ell < 0) ell = digits;
    if (digits > ell) throw std::invalid_argument("to_probabilistic_polynomial: phases exceed the digit bound");

    probabilistic_polynomial pp;
    pp.n = family.n;
    pp.ell = ell;
    const std::size_t size = checked_table_size(family.n);

    for (std::size_t ai = 0; ai < family.atoms.size(); ++ai) {
        const double w = family.atoms[ai].weight;
        phase_table_t t = phase_table(canon[ai]);
        // scaled phase sums at level ell; index 0 carries sum_S phi_S
        std::vector<bigint> bar(size);
        for (std::size_t m = 0; m < size; ++m)
            bar[m] = t.scaled[m] << static_cast<unsigned>(ell - t.level);
        bigint coeff_sum = bar[0];
        bigint k = floor_div_pow2(coeff_sum + (bigint(1) << (ell + 1)) - 1, ell + 1);  // ceil(sum/2) at scale 2^ell
        std::vector<bigint> arg(size);
        for (std::size_t m = 0; m < size; ++m) {
            arg[m] = (k << (ell + 1)) - bar[m];
            if (arg[m] < 0) throw std::logic_error("to_probabilistic_polynomial: negative shifted argument");
        }

        probabilistic_polynomial::atom_detail detail;
        detail.weight = w;
        for (int i = 0; i <= ell; ++i) {
            std::vector<std::uint8_t> bits(size);
            for (std::size_t m = 0; m < size; ++m) bits[m] = static_cast<std::uint8_t>((arg[m] >> i) & 1);
            anf_polynomial yi = moebius(boolean_function(family.n, std::move(bits)));
            const int bound = i == 0 ? 0 : 1 << (i - 1);
            if (deg_f2(yi) > bound) throw std::logic_error("to_probabilistic_polynomial: digit polynomial degree bound violated");
            detail.y.push_back(std::move(yi));
        }
        pp.details.push_back(std::move(detail));

        // mixture outcomes: thresholding the cosine probabilities splits the
        // atom into one polynomial per probability level
        const int vmod = 1 << (ell + 1);
        std::vector<int> v(size);
        for (std::size_t m = 0; m < size; ++m)
            v[m] = static_cast<int>(arg[m] & (vmod - 1));
        std::map<int, double> level_p;  // folded v -> P(output 0); cos is even around 0
        for (std::size_t m = 0; m < size; ++m) {
            int folded = v[m] == 0 ? 0 : std::min(v[m], vmod - v[m]);
            level_p.emplace(folded, (1.0 + std::cos(M_PI * folded / static_cast<double>(1 << ell))) / 2.0);
            v[m] = folded;
        }
        std::vector<double> ps;  // distinct probability levels, ascending
        for (const auto& [lv, p] : level_p) ps.push_back(p);
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        auto rank_of = [&](double p) {
            return static_cast<std::size_t>(std::lower_bound(ps.begin(), ps.end(), p) - ps.begin());
        };
        std::vector<std::size_t> rank(size);
        for (std::size_t m = 0; m < size; ++m) rank[m] = rank_of(level_p.at(v[m]));

        auto add_atom = [&](double weight, const std::vector<std::uint8_t>& bits) {
            if (weight <= 0.0) return;
            probabilistic_polynomial::out_atom atom;
            atom.weight = w * weight;
            atom.poly = moebius(boolean_function(family.n, bits));
            if (atom.weight > 0.0) pp.atoms.push_back(std::move(atom));
        };
        add_atom(ps.front(), std::vector<std::uint8_t>(size, 0));  // z below every level
        for (std::size_t j = 0; j + 1 < ps.size(); ++j) {
            std::vector<std::uint8_t> bits(size);
            for (std::size_t m = 0; m < size; ++m) bits[m] = rank[m] <= j ? 1 : 0;
            add_atom(ps[j + 1] - ps[j], bits);
        }
        add_atom(1.0 - ps.back(), std::vector<std::uint8_t>(size, 1));  // z above every level
    }
    return pp;
}

inline probabilistic_polynomial to_probabilistic_polynomial(const periodic_representation& rep, int ell = -1) {
    return to_probabilistic_polynomial(single_atom_family(rep), ell);
}

// max over x of the probability that the polynomial disagrees with f.
inline double polynomial_error(const probabilistic_polynomial& pp, const boolean_function& f) {
    if (pp.n != f.var_count()) throw std::invalid_argument("polynomial_error: arity mismatch");
    std::vector<std::vector<std::uint8_t>> tables;
    tables.reserve(pp.atoms.size());
    for (const auto& a : pp.atoms) tables.push_back(to_function(a.poly).table());
    double worst = 0.0;
    for (std::uint32_t m = 0; m < f.table_size(); ++m) {
        double p = 0.0;
        for (std::size_t j = 0; j < pp.atoms.size(); ++j)
            if (tables[j][m] != f.value(m)) p += pp.atoms[j].weight;
        worst = std::max(worst, p);
    }
    return worst;
}

}  // namespace pfrep
