#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "pfrep/pfrep.hpp"
#include "test_helpers.hpp"

using namespace pfrep;

namespace {

dyadic frac(long long num, int den_pow) { return dyadic(bigint(num), den_pow); }

struct cli_result {
    int exit_code;
    json report;
};

std::string temp_path() {
    char name[] = "/tmp/pfrep_io_XXXXXX";
    int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    close(fd);
    return name;
}

// runs the built binary, captures stdout
cli_result run_cli(const std::string& args) {
    std::string out_file = temp_path();
    std::string cmd = std::string(PFREP_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    cli_result result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::remove(out_file.c_str());
    if (!text.empty()) result.report = json::parse(text, nullptr, false);
    return result;
}

std::string write_temp(const json& j) {
    std::string path = temp_path();
    std::ofstream out(path);
    out << j.dump();
    return path;
}

}  // namespace

TEST_CASE("dyadic JSON round trip") {
    dyadic d = frac(-37, 5);
    CHECK(dyadic_from_json(dyadic_to_json(d)) == d);
    CHECK(dyadic_to_json(d)["num"] == "-37");
    CHECK(dyadic_to_json(d)["den_pow"] == 5);
    CHECK_THROWS_AS(dyadic_from_json(json{{"num", "1"}}), std::invalid_argument);
}

TEST_CASE("representation JSON round trip") {
    auto rep = cq_recipe(4);
    CHECK(rep_from_json(rep_to_json(rep)) == rep);
    auto r2 = c3_recipe(5);
    CHECK(rep_from_json(rep_to_json(r2)) == r2);
}

TEST_CASE("game and family JSON round trips") {
    auto game = promise_mod_game(2, 3).game;
    auto back = game_from_json(game_to_json(game));
    CHECK(back.players == game.players);
    CHECK(back.entries.size() == game.entries.size());

    randomized_phase_family family = single_atom_family(xor_rep(3));
    auto fb = family_from_json(family_to_json(family));
    CHECK(fb.n == 3);
    CHECK(fb.atoms.size() == 1);
    CHECK(fb.atoms[0].phases == family.atoms[0].phases);
}

TEST_CASE("function spec grammar") {
    CHECK(parse_function_spec("maj:3") == make_maj(3));
    CHECK(parse_function_spec("tt:2:8") == make_and(2));
    CHECK(parse_function_spec("anf:3:x1x2+x2x3+x1x3") == make_maj(3));
    CHECK(parse_function_spec("sym:5:3,4,5") == make_maj(5));
    CHECK(parse_function_spec("mod:3:4") == make_mod(3, 4));
    CHECK(parse_function_spec("exact:2:5") == make_exact(2, 5));
    CHECK(parse_function_spec("anf:2:x1x2+1") == from_truth_table(2, {1, 1, 1, 0}));
    CHECK(parse_function_spec("anf:2:x1+x1") == from_truth_table(2, {0, 0, 0, 0}));
    CHECK(parse_function_spec("tt:0:1").value(0) == 1);

    SECTION("round trip through the hex payload") {
        for (const auto& [label, f] : testing::family_roster(5)) {
            INFO(label);
            CHECK(parse_function_spec("tt:5:" + truth_table_hex(f)) == f);
        }
    }
    SECTION("errors carry positions") {
        CHECK_THROWS_AS(parse_function_spec("nand:2"), spec_parse_error);
        CHECK_THROWS_AS(parse_function_spec("tt:2:fff"), spec_parse_error);
        CHECK_THROWS_AS(parse_function_spec("tt:2:g"), spec_parse_error);
        CHECK_THROWS_AS(parse_function_spec("anf:2:x3"), spec_parse_error);
        CHECK_THROWS_AS(parse_function_spec("anf:2:x1+"), spec_parse_error);
        CHECK_THROWS_AS(parse_function_spec("maj:"), spec_parse_error);
        try {
            parse_function_spec("anf:2:x1*x2");
        } catch (const spec_parse_error& e) {
            CHECK(e.position() == 8);
        }
    }
}

TEST_CASE("cli construct reports and exit codes") {
    auto r = run_cli("construct --fn cq:3 --method mod4");
    CHECK(r.exit_code == 0);
    CHECK(r.report["sparsity"] == 4);
    CHECK(r.report["digits"] == 2);
    CHECK(r.report["verified"] == true);

    auto recipe = run_cli("construct --fn c3:4 --method recipe");
    CHECK(recipe.exit_code == 0);
    CHECK(recipe.report["sparsity"] == 9);

    auto combine = run_cli("construct --fn cq:3 --fn xor:3 --method and-combine --base-method fourier");
    CHECK(combine.exit_code == 0);
    CHECK(combine.report["verified"] == true);

    SECTION("--out writes a representation that verify accepts") {
        std::string path = temp_path();
        auto built = run_cli("construct --fn maj:3 --method anf --out " + path);
        CHECK(built.exit_code == 0);
        auto checked = run_cli("verify --rep " + path + " --fn maj:3");
        CHECK(checked.exit_code == 0);
        CHECK(checked.report["ok"] == true);
        std::remove(path.c_str());
    }
}

TEST_CASE("cli bounds and oracle") {
    auto b = run_cli("bounds --fn mod:3:4");
    CHECK(b.exit_code == 0);
    CHECK(b.report["lower_bound"] == 15);

    auto o = run_cli("oracle --fn and:2");
    CHECK(o.exit_code == 0);
    CHECK(o.report["status"] == "found");
    CHECK(o.report["pfs"] == 3);
}

TEST_CASE("cli verify distinguishes failure by exit code 2") {
    auto good = write_temp(rep_to_json(xor_rep(2)));
    auto r = run_cli("verify --rep " + good + " --fn xor:2");
    CHECK(r.exit_code == 0);
    CHECK(r.report["ok"] == true);
    std::remove(good.c_str());

    auto bad = write_temp(rep_to_json(make_rep(2, {{0b01, frac(1, 1)}})));
    auto r2 = run_cli("verify --rep " + bad + " --fn xor:2");
    CHECK(r2.exit_code == 2);
    CHECK(r2.report["ok"] == false);
    CHECK(r2.report["witness"] == json::array({0, 0}));
    std::remove(bad.c_str());
}

TEST_CASE("cli protocol commands") {
    auto d = run_cli("depth2-sim --fn or:4");
    CHECK(d.exit_code == 0);
    CHECK(d.report["qubit_count"] == 19);
    CHECK(d.report["ok"] == true);

    auto one = run_cli("depth2-sim --fn maj:3 --input 110");
    CHECK(one.exit_code == 0);
    CHECK(one.report["verdicts"][0]["outputs"] == json::array({1}));

    auto i = run_cli("identity-check --which maj3 --n 2");
    CHECK(i.exit_code == 0);
    CHECK(i.report["holds"] == true);

    auto nb = run_cli("nmqc-bias --fn cq:2 --restarts 8 --seed 0");
    CHECK(nb.exit_code == 0);
    CHECK(nb.report["classical_bias"] == 0.5);
    CHECK(nb.report["bias"].get<double>() >= 0.7071);
}

TEST_CASE("cli approx-check") {
    auto family = write_temp(family_to_json(single_atom_family(from_anf(make_maj(3)))));
    auto r = run_cli("approx-check --family " + family + " --fn maj:3 --eps 0");
    CHECK(r.exit_code == 0);
    CHECK(r.report["pointwise_ok"] == true);
    CHECK(r.report["distribution_ok"] == true);

    auto r2 = run_cli("approx-check --family " + family + " --fn and:3 --eps 0.1");
    CHECK(r2.exit_code == 2);
    std::remove(family.c_str());
}

TEST_CASE("cli error paths exit with 1") {
    CHECK(run_cli("construct --fn bogus:3 --method fourier").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("construct --fn and:3 --method mod4").exit_code == 1);
}

TEST_CASE("reports are byte-stable across runs") {
    auto a = run_cli("construct --fn cq:5 --method recipe");
    auto b = run_cli("construct --fn cq:5 --method recipe");
    CHECK(a.report.dump() == b.report.dump());
    auto n1 = run_cli("nmqc-bias --fn cq:2 --seed 7 --restarts 4");
    auto n2 = run_cli("nmqc-bias --fn cq:2 --seed 7 --restarts 4");
    CHECK(n1.report.dump() == n2.report.dump());
}
