#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "cartansuper/serialize.hpp"
#include "corpus.hpp"
#include "doctest.h"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Runs the CLI with the given arguments, capturing stdout+stderr.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string capture = "cli_capture_" + std::to_string(counter++) + ".txt";
    const std::string cmd =
        std::string(CLI_BIN_PATH) + " " + args + " > " + capture + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(capture);
    std::remove(capture.c_str());
    return r;
}

/// Builds the desk-shape special model file once and returns its path.
const std::string& special_model_path() {
    static const std::string path = [] {
        const std::string p = "cli_special_p3.json";
        const auto r = run_cli(
            "build --type special --m 2 --n 2 --t 1,1 --p 3 --out " + p);
        REQUIRE(r.exit_code == 0);
        return p;
    }();
    return path;
}

}  // namespace

TEST_CASE("cli: build") {
    const auto ok = run_cli(
        "build --type special --m 2 --n 2 --t 1,1 --p 3 --out cli_build.json");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"ok\": true") != std::string::npos);
    CHECK(slurp("cli_build.json") ==
          slurp(std::string(GOLDEN_DIR) + "/s_2211_p3.json"));
    std::remove("cli_build.json");

    CHECK(run_cli("build --type special --m 2 --n 2 --t 1,1 --p 2 --out x.json")
              .exit_code == 2);
    CHECK(run_cli("build --type special --m 1 --n 2 --t 1 --p 3 --out x.json")
              .exit_code == 2);
    CHECK(run_cli("build --type frobenius --m 2 --n 2 --t 1,1 --p 3 --out x.json")
              .exit_code == 2);
    CHECK(run_cli("build").exit_code == 2);
    CHECK(run_cli("no-such-verb").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli: info and bracket") {
    const auto& path = special_model_path();
    const auto info = run_cli("info " + path);
    CHECK(info.exit_code == 0);
    CHECK(info.out.find("107") != std::string::npos);
    CHECK(info.out.find("S(2,2;(1,1))/F_3") != std::string::npos);

    const auto br = run_cli("bracket " + path + " --a 0 --b 5");
    CHECK(br.exit_code == 0);

    CHECK(run_cli("bracket " + path + " --a 0 --b 500").exit_code == 2);
    CHECK(run_cli("info missing-file.json").exit_code == 2);
}

TEST_CASE("cli: weights") {
    const auto& path = special_model_path();
    const auto csv1 = run_cli("weights " + path + " --format csv");
    const auto csv2 = run_cli("weights " + path + " --format csv");
    CHECK(csv1.exit_code == 0);
    CHECK(csv1.out == csv2.out);  // deterministic output
    CHECK(csv1.out.find("D_{1,2}(x2),0,-1,2,2,0,0") != std::string::npos);

    const auto js = run_cli("weights " + path + " --format json");
    CHECK(js.exit_code == 0);

    // a Witt model carries no torus
    const auto wr = run_cli(
        "build --type witt --m 2 --n 2 --t 1,1 --p 3 --out cli_witt.json");
    REQUIRE(wr.exit_code == 0);
    CHECK(run_cli("weights cli_witt.json").exit_code == 4);
    std::remove("cli_witt.json");
}

TEST_CASE("cli: check-structure") {
    CHECK(run_cli("check-structure " + special_model_path()).exit_code == 0);

    // hand-written model violating the Jacobi identity: [x,y]=z, [x,z]=x
    cartansuper::write_model_file(
        cartansuper::make_custom_model(3, {0, 0, 0}, {}, {},
                                       {{0, 1, 2, 1}, {0, 2, 0, 1}}),
        "cli_bad.json");
    const auto bad = run_cli("check-structure cli_bad.json");
    CHECK(bad.exit_code == 3);
    std::remove("cli_bad.json");
}

TEST_CASE("cli: solve-der") {
    const auto r = run_cli("solve-der " + special_model_path() + " --parity 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"dim_der\": 56") != std::string::npos);
    CHECK(run_cli("solve-der " + special_model_path() + " --parity 7")
              .exit_code == 2);

    cartansuper::write_model_file(corpus::sl2_p5(), "cli_sl2.json");
    const auto naive = run_cli("solve-der cli_sl2.json --parity 0 --naive");
    CHECK(naive.exit_code == 0);
    CHECK(naive.out.find("\"dim_der\": 3") != std::string::npos);
    std::remove("cli_sl2.json");
}

TEST_CASE("cli: solve-bider") {
    const auto& path = special_model_path();
    const auto r1 = run_cli("solve-bider " + path + " --parity 1 --no-wall-time");
    const auto r2 = run_cli("solve-bider " + path + " --parity 1 --no-wall-time");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);  // golden-comparable without wall time
    CHECK(r1.out.find("\"nullspace_dim\": 0") != std::string::npos);

    const auto r0 = run_cli("solve-bider " + path + " --parity 0 --no-wall-time");
    CHECK(r0.exit_code == 0);
    CHECK(r0.out.find("\"nullspace_dim\": 1") != std::string::npos);
    CHECK(r0.out.find("\"verdict\": \"equal\"") != std::string::npos);
    CHECK(r0.out.find("\"lambda\": 1") != std::string::npos);

    // brute-force oracle cross-check on a dimension-6 model
    cartansuper::write_model_file(corpus::sl2_plus_heis_p5(), "cli_dim6.json");
    const auto oracle =
        run_cli("solve-bider cli_dim6.json --parity 0 --oracle --no-wall-time");
    CHECK(oracle.exit_code == 0);
    CHECK(oracle.out.find("oracle") != std::string::npos);
    // the oracle refuses large models
    CHECK(run_cli("solve-bider " + path + " --parity 0 --oracle").exit_code == 2);
    std::remove("cli_dim6.json");
}

TEST_CASE("cli: verify-theorem") {
    const auto ok = run_cli("verify-theorem " + special_model_path() +
                            " --no-wall-time");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("THEOREM VERIFIED") != std::string::npos);
    CHECK(ok.out.find("identity_checks") != std::string::npos);

    cartansuper::write_model_file(corpus::abelian2_p3(), "cli_abelian.json");
    const auto na = run_cli("verify-theorem cli_abelian.json");
    CHECK(na.exit_code == 5);
    CHECK(na.out.find("NOT APPLICABLE") != std::string::npos);
    std::remove("cli_abelian.json");
}

TEST_CASE("cli: dimension guard environment variable") {
    setenv("CARTANSUPER_MAX_DIM", "50", 1);
    const auto r = run_cli(
        "build --type witt --m 2 --n 2 --t 1,1 --p 3 --out cli_guard.json");
    unsetenv("CARTANSUPER_MAX_DIM");
    CHECK(r.exit_code == 2);
    std::remove("cli_guard.json");
}

TEST_CASE("cli: cleanup") { std::remove(special_model_path().c_str()); }
