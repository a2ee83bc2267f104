// Command-line front end. Every subcommand prints one JSON report to stdout;
// exit code 0 on success, 2 when a verification-style check fails, 1 on
// errors. Reports are byte-stable for fixed inputs and seeds; timing is only
// added on request.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfrep/pfrep.hpp"

namespace {

using pfrep::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

struct cli_state {
    bool pretty = false;
    bool timing = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    int exit_code = 0;

    void emit(json report) {
        if (timing) {
            auto dt = std::chrono::steady_clock::now() - start;
            report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
        }
        std::cout << (pretty ? report.dump(2) : report.dump()) << "\n";
    }
};

json rep_summary(const pfrep::periodic_representation& rep, const pfrep::boolean_function& target) {
    pfrep::verification_report vr = pfrep::verify(rep, target);
    json j;
    j["representation"] = pfrep::rep_to_json(pfrep::canonicalize(rep));
    j["sparsity"] = vr.sparsity;
    j["digits"] = vr.digits;
    j["verified"] = vr.ok;
    if (vr.witness) j["witness"] = *vr.witness;
    return j;
}

pfrep::periodic_representation build_rep(const std::string& method, const pfrep::boolean_function& f,
                                         const std::string& fn_spec) {
    if (method == "fourier") return pfrep::from_fourier(f);
    if (method == "anf") return pfrep::from_anf(f);
    if (method == "mod4" || method == "recipe") {
        auto colon = fn_spec.find(':');
        std::string family = fn_spec.substr(0, colon);
        if (family == "cq") return pfrep::cq_recipe(f.var_count());
        if (family == "c3" && method == "recipe") return pfrep::c3_recipe(f.var_count());
        if (family == "xor" && method == "recipe") return pfrep::xor_rep(f.var_count());
        throw std::runtime_error("method '" + method + "' supports cq:<n>" +
                                 (method == "recipe" ? ", c3:<n> and xor:<n>" : "") + " only");
    }
    throw std::runtime_error("unknown method '" + method + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for periodic Fourier representations and GHZ XOR-game protocols"};
    app.require_subcommand(1);
    app.fallthrough();  // --pretty / --timing may follow the subcommand
    cli_state state;
    app.add_flag("--pretty", state.pretty, "indent the JSON report");
    app.add_flag("--timing", state.timing, "include elapsed milliseconds in the report");

    std::string fn_spec, rep_path, method = "fourier", base_method = "fourier";
    std::vector<std::string> fn_specs, rep_paths;
    std::string game_path, family_path, mu_arg = "uniform", which, input_bits, out_path;
    std::int64_t smax = -1;
    std::int64_t budget_ms = 60000;
    int restarts = 32, idn = 1, idm = 2;
    double tol = 1e-9, eps = 0.0;
    std::uint64_t seed = 0;

    auto* analyze = app.add_subcommand("analyze", "spectrum, ANF and symmetry of a function");
    analyze->add_option("--fn", fn_spec, "function spec")->required();

    auto* construct = app.add_subcommand("construct", "build a periodic Fourier representation");
    construct->add_option("--fn", fn_specs, "function spec (repeatable for combines)");
    construct->add_option("--rep", rep_paths, "representation JSON file (combines)");
    construct->add_option("--method", method, "fourier|anf|mod4|and-combine|xor-combine|recipe");
    construct->add_option("--base-method", base_method, "fourier|anf: how combine inputs are built");
    construct->add_option("--out", out_path, "also write the representation JSON to this file");

    auto* verify_cmd = app.add_subcommand("verify", "check a representation against a function");
    verify_cmd->add_option("--rep", rep_path, "representation JSON file")->required();
    verify_cmd->add_option("--fn", fn_spec, "function spec")->required();

    auto* bounds = app.add_subcommand("bounds", "lower bounds on the periodic Fourier sparsity");
    bounds->add_option("--fn", fn_spec, "function spec")->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive minimal-sparsity search (n <= 4)");
    oracle->add_option("--fn", fn_spec, "function spec")->required();
    oracle->add_option("--smax", smax, "largest sparsity to try (default 2^n - 1)");
    oracle->add_option("--budget-ms", budget_ms, "time budget, 0 = unlimited");

    auto* bias = app.add_subcommand("nmqc-bias", "quantum vs classical bias of an XOR game");
    bias->add_option("--fn", fn_spec, "function spec for the uniform total game");
    bias->add_option("--game", game_path, "game JSON file");
    bias->add_option("--restarts", restarts, "optimizer restarts");
    bias->add_option("--tol", tol, "optimizer stopping tolerance");
    bias->add_option("--seed", seed, "optimizer seed");

    auto* depth2 = app.add_subcommand("depth2-sim", "depth-2 protocol for a symmetric function");
    depth2->add_option("--fn", fn_spec, "function spec (must be symmetric)")->required();
    depth2->add_option("--input", input_bits, "single input, e.g. 101 (x1 first)");

    auto* identity = app.add_subcommand("identity-check", "distributive identities over XORed shares");
    identity->add_option("--which", which, "and2|maj3|cqm")->required();
    identity->add_option("--n", idn, "shares per input")->required();
    identity->add_option("--m", idm, "inner arity (cqm only)");

    auto* approx = app.add_subcommand("approx-check", "bounded-error checks for a phase family");
    approx->add_option("--family", family_path, "phase family JSON file")->required();
    approx->add_option("--fn", fn_spec, "function spec")->required();
    approx->add_option("--eps", eps, "error bound in [0, 1/2)")->required();
    approx->add_option("--mu", mu_arg, "input distribution: 'uniform' or a JSON file of weights");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) {
            auto f = pfrep::parse_function_spec(fn_spec);
            auto spec = pfrep::wht(f);
            auto st = pfrep::stats(spec);
            auto p = pfrep::moebius(f);
            json monomials = json::array();
            for (auto s : p.monomials) monomials.push_back(pfrep::mask_to_indices(s));
            json j{{"command", "analyze"}, {"fn", fn_spec}, {"n", f.var_count()},
                   {"truth_table", pfrep::truth_table_hex(f)}};
            j["fourier"] = {{"sparsity", st.sparsity},
                            {"nonempty_sparsity", st.nonempty_sparsity},
                            {"degree", st.degree},
                            {"dimension", pfrep::dimension(spec)},
                            {"coeffs", pfrep::spectrum_to_json(spec)}};
            j["anf"] = {{"monomials", monomials}, {"degree", pfrep::deg_f2(p)}};
            if (auto prof = pfrep::is_symmetric(f)) {
                j["symmetric"] = {{"accept", std::vector<int>(prof->accept.begin(), prof->accept.end())}};
            } else {
                j["symmetric"] = nullptr;
            }
            state.emit(j);
        } else if (construct->parsed()) {
            json j{{"command", "construct"}, {"method", method}};
            pfrep::periodic_representation rep;
            pfrep::boolean_function target(0, {0});
            if (method == "and-combine" || method == "xor-combine") {
                std::vector<pfrep::periodic_representation> reps;
                std::vector<pfrep::boolean_function> fns;
                for (const auto& spec_text : fn_specs) {
                    auto f = pfrep::parse_function_spec(spec_text);
                    reps.push_back(build_rep(base_method, f, spec_text));
                    fns.push_back(f);
                }
                for (const auto& path : rep_paths) {
                    reps.push_back(pfrep::rep_from_json(load_json(path)));
                    auto implied = pfrep::implied_function(reps.back());
                    if (!implied) throw std::runtime_error(path + ": representation does not verify");
                    fns.push_back(*implied);
                }
                if (reps.empty()) throw std::runtime_error("combines need at least one --fn or --rep");
                rep = method == "and-combine" ? pfrep::and_combine(reps) : pfrep::xor_combine(reps);
                std::vector<std::uint8_t> bits(fns.front().table_size());
                for (std::uint32_t m = 0; m < bits.size(); ++m) {
                    int acc = method == "and-combine" ? 1 : 0;
                    for (const auto& f : fns) {
                        acc = method == "and-combine" ? (acc & f.value(m)) : (acc ^ f.value(m));
                    }
                    bits[m] = static_cast<std::uint8_t>(acc);
                }
                target = pfrep::boolean_function(fns.front().var_count(), std::move(bits));
                j["fn"] = fn_specs;
            } else {
                if (fn_specs.size() != 1) throw std::runtime_error("exactly one --fn required");
                target = pfrep::parse_function_spec(fn_specs.front());
                rep = build_rep(method, target, fn_specs.front());
                j["fn"] = fn_specs.front();
            }
            json summary = rep_summary(rep, target);
            j.update(summary);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                out << summary["representation"].dump() << "\n";
            }
            if (!j["verified"].get<bool>()) state.exit_code = 2;
            state.emit(j);
        } else if (verify_cmd->parsed()) {
            auto f = pfrep::parse_function_spec(fn_spec);
            auto rep = pfrep::rep_from_json(load_json(rep_path));
            auto vr = pfrep::verify(rep, f);
            json j{{"command", "verify"}, {"fn", fn_spec}, {"rep", rep_path}};
            j.update(pfrep::report_to_json(vr));
            if (!vr.ok) state.exit_code = 2;
            state.emit(j);
        } else if (bounds->parsed()) {
            auto f = pfrep::parse_function_spec(fn_spec);
            auto spec = pfrep::wht(f);
            int deg = pfrep::deg_f2(pfrep::moebius(f));
            json j{{"command", "bounds"},
                   {"fn", fn_spec},
                   {"deg_f2", deg},
                   {"fourier_dimension", pfrep::dimension(spec)},
                   {"lower_bound", pfrep::lower_bound(f)}};
            state.emit(j);
        } else if (oracle->parsed()) {
            auto f = pfrep::parse_function_spec(fn_spec);
            pfrep::oracle_options opt;
            opt.s_max = smax;
            opt.budget = std::chrono::milliseconds(budget_ms);
            auto result = pfrep::brute_force_pfs(f, opt);
            json j{{"command", "oracle"}, {"fn", fn_spec}, {"smax", smax}, {"budget_ms", budget_ms}};
            switch (result.status) {
                case pfrep::oracle_status::found: j["status"] = "found"; break;
                case pfrep::oracle_status::exhausted: j["status"] = "exhausted"; break;
                case pfrep::oracle_status::budget_exceeded: j["status"] = "budget-exceeded"; break;
            }
            if (result.status == pfrep::oracle_status::found) {
                j["pfs"] = result.pfs;
                j["witness"] = pfrep::rep_to_json(*result.witness);
            } else {
                j["pfs"] = nullptr;
                j["witness"] = nullptr;
            }
            state.emit(j);
        } else if (bias->parsed()) {
            pfrep::xor_game game;
            json j{{"command", "nmqc-bias"}};
            if (!game_path.empty()) {
                game = pfrep::game_from_json(load_json(game_path));
                j["game"] = game_path;
            } else if (!fn_spec.empty()) {
                game = pfrep::uniform_game(pfrep::parse_function_spec(fn_spec));
                j["fn"] = fn_spec;
            } else {
                throw std::runtime_error("nmqc-bias needs --fn or --game");
            }
            pfrep::optimize_options opt;
            opt.restarts = restarts;
            opt.tol = tol;
            opt.seed = seed;
            auto result = pfrep::optimize_bias(game, opt);
            j["players"] = game.players;
            j["classical_bias"] = pfrep::classical_bias(game);
            j["bias"] = result.bias;
            j["phases"] = result.phases;
            j["restarts"] = restarts;
            j["seed"] = seed;
            j["tol"] = tol;
            state.emit(j);
        } else if (depth2->parsed()) {
            auto f = pfrep::parse_function_spec(fn_spec);
            auto profile = pfrep::is_symmetric(f);
            if (!profile) throw std::runtime_error("depth2-sim: function is not symmetric");
            auto proto = pfrep::build_symmetric(*profile);
            json j{{"command", "depth2-sim"},
                   {"fn", fn_spec},
                   {"n", proto.n},
                   {"qubit_count", pfrep::qubit_count(proto)},
                   {"blocks", proto.blocks.size()},
                   {"or_mode", proto.or_mode}};
            auto run_input = [&](std::uint32_t m) {
                std::vector<std::uint8_t> x(proto.n);
                std::string bits;
                for (int i = 0; i < proto.n; ++i) {
                    x[i] = (m >> i) & 1;
                    bits.push_back(x[i] ? '1' : '0');
                }
                auto sup = pfrep::simulate_support(proto, x);
                bool ok = sup.outputs.size() == 1 && *sup.outputs.begin() == f.value(m);
                return json{{"input", bits},
                            {"outputs", std::vector<int>(sup.outputs.begin(), sup.outputs.end())},
                            {"support_size", sup.support_size},
                            {"ok", ok}};
            };
            json verdicts = json::array();
            bool all_ok = true;
            json witness = nullptr;
            if (!input_bits.empty()) {
                if (static_cast<int>(input_bits.size()) != proto.n)
                    throw std::runtime_error("--input needs exactly n bits");
                std::uint32_t m = 0;
                for (int i = 0; i < proto.n; ++i) {
                    if (input_bits[i] != '0' && input_bits[i] != '1')
                        throw std::runtime_error("--input must be a 0/1 string");
                    m |= static_cast<std::uint32_t>(input_bits[i] - '0') << i;
                }
                json v = run_input(m);
                all_ok = v["ok"].get<bool>();
                if (!all_ok) witness = v["input"];
                verdicts.push_back(std::move(v));
            } else {
                for (std::uint32_t m = 0; m < f.table_size(); ++m) {
                    json v = run_input(m);
                    if (!v["ok"].get<bool>() && witness.is_null()) witness = v["input"];
                    all_ok = all_ok && v["ok"].get<bool>();
                    verdicts.push_back(std::move(v));
                }
            }
            j["verdicts"] = verdicts;
            j["ok"] = all_ok;
            j["witness"] = witness;
            if (!all_ok) state.exit_code = 2;
            state.emit(j);
        } else if (identity->parsed()) {
            pfrep::distributive_identity id;
            if (which == "and2") id = pfrep::distributive_identity::and2;
            else if (which == "maj3") id = pfrep::distributive_identity::maj3;
            else if (which == "cqm") id = pfrep::distributive_identity::cqm;
            else throw std::runtime_error("unknown identity '" + which + "'");
            bool holds = pfrep::check_distributive_identity(id, idn, idm);
            json j{{"command", "identity-check"}, {"which", which}, {"n", idn}, {"holds", holds}};
            if (which == "cqm") j["m"] = idm;
            if (!holds) state.exit_code = 2;
            state.emit(j);
        } else if (approx->parsed()) {
            auto f = pfrep::parse_function_spec(fn_spec);
            auto family = pfrep::family_from_json(load_json(family_path));
            std::vector<double> mu;
            if (mu_arg == "uniform") {
                mu.assign(f.table_size(), 1.0 / static_cast<double>(f.table_size()));
            } else {
                mu = load_json(mu_arg).get<std::vector<double>>();
            }
            bool pointwise = pfrep::check_pointwise_error(family, f, eps);
            bool distribution = pfrep::check_distribution_error(family, f, mu, eps);
            json j{{"command", "approx-check"}, {"fn", fn_spec}, {"family", family_path},
                   {"eps", eps},  {"mu", mu_arg},      {"pointwise_ok", pointwise},
                   {"distribution_ok", distribution}};
            if (!pointwise || !distribution) state.exit_code = 2;
            state.emit(j);
        }
    } catch (const std::exception& e) {
        json err{{"error", e.what()}};
        std::cout << (state.pretty ? err.dump(2) : err.dump()) << "\n";
        return 1;
    }
    return state.exit_code;
}
