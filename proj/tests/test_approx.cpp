#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pfrep/approx.hpp"
#include "test_helpers.hpp"

using namespace pfrep;
using Catch::Matchers::WithinAbs;

namespace {

dyadic frac(long long num, int den_pow) { return dyadic(bigint(num), den_pow); }

// the two-player quarter-phase atom: cos is +/- 1/sqrt(2) everywhere
randomized_phase_family chsh_atom() {
    return single_atom_family(
        make_rep(2, {{0, frac(1, 2)}, {0b01, frac(-1, 2)}, {0b10, frac(-1, 2)}}));
}

boolean_function negate(const boolean_function& f) {
    std::vector<std::uint8_t> bits(f.table_size());
    for (std::uint32_t m = 0; m < f.table_size(); ++m) bits[m] = 1 - f.value(m);
    return boolean_function(f.var_count(), std::move(bits));
}

constexpr double kQuarterError = (1.0 - 1.0 / 1.4142135623730951) / 2.0;

}  // namespace

TEST_CASE("expected value of a phase family") {
    SECTION("a verified single atom reproduces the +/-1 outputs") {
        auto family = single_atom_family(xor_rep(2));
        for (std::uint32_t m = 0; m < 4; ++m) {
            std::vector<std::uint8_t> x{static_cast<std::uint8_t>(m & 1),
                                        static_cast<std::uint8_t>((m >> 1) & 1)};
            CHECK_THAT(expected_value(family, x), WithinAbs(make_xor(2).sign_value(m), 1e-12));
        }
    }
    SECTION("the quarter-phase atom at the all-zero input") {
        CHECK_THAT(expected_value(chsh_atom(), {0, 0}), WithinAbs(1.0 / std::sqrt(2.0), 1e-12));
    }
    SECTION("opposite phases average to the cosine") {
        randomized_phase_family family;
        family.n = 1;
        family.atoms.push_back({0.5, make_rep(1, {{0, frac(3, 3)}})});
        family.atoms.push_back({0.5, make_rep(1, {{0, frac(-3, 3)}})});
        CHECK_THAT(expected_value(family, {0}), WithinAbs(std::cos(M_PI * 3.0 / 8.0), 1e-12));
    }
}

TEST_CASE("pointwise error checks") {
    CHECK(check_pointwise_error(chsh_atom(), make_cq(2), kQuarterError + 1e-9));
    CHECK_FALSE(check_pointwise_error(chsh_atom(), make_cq(2), kQuarterError - 1e-6));
    CHECK(check_pointwise_error(single_atom_family(from_anf(make_maj(3))), make_maj(3), 0.0));
    CHECK_FALSE(check_pointwise_error(single_atom_family(from_anf(make_maj(3))), negate(make_maj(3)), 0.4));
    CHECK_THROWS_AS(check_pointwise_error(chsh_atom(), make_cq(2), 0.5), std::invalid_argument);
}

TEST_CASE("distributional error checks") {
    std::vector<double> uniform(4, 0.25);
    CHECK(check_distribution_error(chsh_atom(), make_cq(2), uniform, kQuarterError + 1e-9));
    CHECK(check_distribution_error(single_atom_family(xor_rep(2)), make_xor(2), {0.7, 0.1, 0.1, 0.1}, 0.0));
    SECTION("the constant +1 family misses parity half the time") {
        auto family = single_atom_family(make_rep(2, {{0, dyadic(0)}}));
        CHECK_FALSE(check_distribution_error(family, make_xor(2), uniform, 0.49));
    }
    CHECK_THROWS_AS(check_distribution_error(chsh_atom(), make_cq(2), {0.5, 0.5}, 0.1),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_distribution_error(chsh_atom(), make_cq(2), {0.5, 0.5, 0.5, 0.5}, 0.1),
                    std::invalid_argument);
}

TEST_CASE("digit polynomials of exact representations") {
    SECTION("cq3 at two digits collapses onto its own polynomial") {
        auto pp = to_probabilistic_polynomial(cq_recipe(3));
        CHECK(pp.ell == 2);
        REQUIRE(pp.details.size() == 1);
        CHECK(pp.details[0].y[0].monomials.empty());
        CHECK(pp.details[0].y[1].monomials.empty());
        CHECK(pp.details[0].y[2] == moebius(make_cq(3)));
        REQUIRE(pp.atoms.size() == 1);
        CHECK(pp.atoms[0].poly == moebius(make_cq(3)));
        CHECK_THAT(pp.atoms[0].weight, WithinAbs(1.0, 1e-12));
        CHECK(polynomial_error(pp, make_cq(3)) == 0.0);
    }
    SECTION("xor2 at one digit") {
        auto pp = to_probabilistic_polynomial(xor_rep(2));
        CHECK(pp.ell == 1);
        CHECK(pp.details[0].y[1] == moebius(make_xor(2)));
        CHECK(polynomial_error(pp, make_xor(2)) == 0.0);
    }
    SECTION("the constant-true representation at zero digits") {
        auto pp = to_probabilistic_polynomial(make_rep(1, {{0, dyadic(1)}}), 0);
        REQUIRE(pp.atoms.size() == 1);
        CHECK(to_function(pp.atoms[0].poly) == from_truth_table(1, {1, 1}));
    }
    SECTION("phases beyond the digit bound are rejected") {
        CHECK_THROWS_AS(to_probabilistic_polynomial(cq_recipe(3), 1), std::invalid_argument);
    }
}

TEST_CASE("degree bounds and exact collapse across families") {
    for (int n = 2; n <= 8; ++n) {
        for (const auto& [label, f] : testing::family_roster(n)) {
            INFO(label);
            for (auto rep : {from_anf(f), cq_recipe(n)}) {
                int ell = rep_stats(rep).digits;
                auto pp = to_probabilistic_polynomial(rep, ell);
                const auto& y = pp.details[0].y;
                for (int i = 1; i <= ell; ++i) CHECK(deg_f2(y[i]) <= (1 << (i - 1)));
                for (const auto& atom : pp.atoms) CHECK(deg_f2(atom.poly) <= (1 << ell) - 1);
                // exact representations: digits below ell vanish, the top one is f
                auto implied = implied_function(rep);
                REQUIRE(implied.has_value());
                for (int i = 0; i < ell; ++i) CHECK(y[i].monomials.empty());
                CHECK(to_function(y[ell]) == *implied);
                CHECK(polynomial_error(pp, *implied) == 0.0);
                CHECK(deg_f2(moebius(*implied)) <= ell);  // digit law, side by side
            }
        }
    }
}

TEST_CASE("error of mixtures") {
    auto f = make_maj(3);
    SECTION("a single wrong-sign atom always disagrees") {
        probabilistic_polynomial pp;
        pp.n = 3;
        pp.atoms.push_back({1.0, moebius(negate(f))});
        CHECK(polynomial_error(pp, f) == 1.0);
    }
    SECTION("an even mixture disagrees half the time") {
        probabilistic_polynomial pp;
        pp.n = 3;
        pp.atoms.push_back({0.5, moebius(f)});
        pp.atoms.push_back({0.5, moebius(negate(f))});
        CHECK_THAT(polynomial_error(pp, f), WithinAbs(0.5, 1e-12));
    }
    SECTION("the quarter-phase atom misses cq2 with the cosine gap") {
        auto pp = to_probabilistic_polynomial(chsh_atom());
        CHECK_THAT(polynomial_error(pp, make_cq(2)), WithinAbs(kQuarterError, 1e-12));
    }
}
