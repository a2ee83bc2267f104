// JSON encodings for the exchange formats: dyadics as exact decimal strings,
// subsets as 1-based index arrays, plus representations, spectra, games and
// phase families.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfrep/approx.hpp"
#include "pfrep/dyadic.hpp"
#include "pfrep/fourier.hpp"
#include "pfrep/nmqc.hpp"
#include "pfrep/periodic.hpp"

namespace pfrep {

using json = nlohmann::json;

inline json dyadic_to_json(const dyadic& d) {
    return json{{"num", d.num().str()}, {"den_pow", d.den_pow()}};
}

inline dyadic dyadic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den_pow")) {
        throw std::invalid_argument("dyadic JSON needs {\"num\", \"den_pow\"}");
    }
    return dyadic(bigint(j.at("num").get<std::string>()), j.at("den_pow").get<int>());
}

inline std::vector<int> mask_to_indices(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i + 1);
    return out;
}

inline std::uint32_t indices_to_mask(const std::vector<int>& indices, int n) {
    std::uint32_t mask = 0;
    for (int i : indices) {
        if (i < 1 || i > n) throw std::invalid_argument("set index out of range [1, n]");
        mask |= std::uint32_t{1} << (i - 1);
    }
    return mask;
}

inline json coeff_list_to_json(const std::map<std::uint32_t, dyadic>& coeffs) {
    json list = json::array();
    for (const auto& [s, c] : coeffs) {
        list.push_back(json{{"set", mask_to_indices(s)}, {"coeff", dyadic_to_json(c)}});
    }
    return list;
}

inline json spectrum_to_json(const fourier_spectrum& spec) { return coeff_list_to_json(spec.coeffs); }

inline json rep_to_json(const periodic_representation& rep) {
    return json{{"n", rep.n}, {"phi", coeff_list_to_json(rep.phi)}};
}

inline periodic_representation rep_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("phi")) {
        throw std::invalid_argument("representation JSON needs {\"n\", \"phi\"}");
    }
    periodic_representation rep;
    rep.n = j.at("n").get<int>();
    checked_table_size(rep.n);
    for (const auto& item : j.at("phi")) {
        std::uint32_t mask = indices_to_mask(item.at("set").get<std::vector<int>>(), rep.n);
        rep.set(mask, dyadic_from_json(item.at("coeff")));
    }
    rep.phi.try_emplace(0, dyadic());
    return rep;
}

inline json game_to_json(const xor_game& game) {
    json entries = json::array();
    for (const auto& e : game.entries) {
        entries.push_back(json{{"z", e.z}, {"h", e.h}, {"mu", e.mu}});
    }
    return json{{"k", game.players}, {"entries", entries}};
}

inline xor_game game_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("entries")) {
        throw std::invalid_argument("game JSON needs {\"k\", \"entries\"}");
    }
    xor_game game;
    game.players = j.at("k").get<int>();
    for (const auto& item : j.at("entries")) {
        xor_game::entry e;
        e.z = item.at("z").get<std::vector<int>>();
        e.h = item.at("h").get<int>();
        e.mu = item.at("mu").get<double>();
        game.entries.push_back(std::move(e));
    }
    validate_game(game);
    return game;
}

inline json family_to_json(const randomized_phase_family& family) {
    json atoms = json::array();
    for (const auto& a : family.atoms) {
        atoms.push_back(json{{"w", a.weight}, {"phi", coeff_list_to_json(a.phases.phi)}});
    }
    return json{{"n", family.n}, {"atoms", atoms}};
}

inline randomized_phase_family family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("atoms")) {
        throw std::invalid_argument("phase family JSON needs {\"n\", \"atoms\"}");
    }
    randomized_phase_family family;
    family.n = j.at("n").get<int>();
    checked_table_size(family.n);
    for (const auto& item : j.at("atoms")) {
        phase_atom atom;
        atom.weight = item.at("w").get<double>();
        atom.phases.n = family.n;
        for (const auto& phi : item.at("phi")) {
            std::uint32_t mask = indices_to_mask(phi.at("set").get<std::vector<int>>(), family.n);
            atom.phases.set(mask, dyadic_from_json(phi.at("coeff")));
        }
        atom.phases.phi.try_emplace(0, dyadic());
        family.atoms.push_back(std::move(atom));
    }
    validate_family(family);
    return family;
}

inline json report_to_json(const verification_report& report) {
    json j{{"ok", report.ok}, {"sparsity", report.sparsity}, {"digits", report.digits}};
    if (report.witness) {
        j["witness"] = *report.witness;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace pfrep
