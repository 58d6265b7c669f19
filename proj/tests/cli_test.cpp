#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SDS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe))
        r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("sds_cli_test_" + name);
}

}  // namespace

TEST_CASE("construct then verify round-trips through a file") {
    auto path = temp_file("singer13.json");
    auto built = run_cli("construct singer --q 3 --d 2 --modulus 2,1,1,1 --out " +
                         path.string());
    REQUIRE(built.exit_code == 0);

    auto verified = run_cli("verify --in " + path.string());
    CHECK(verified.exit_code == 0);
    auto doc = json::parse(verified.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["params"]["v"] == 13);
    CHECK(doc["params"]["k"] == 4);
    CHECK(doc["params"]["lambda"] == 1);

    auto spec = json::parse(run_cli("spectrum --in " + path.string()).out);
    CHECK(spec["pass"] == true);
    CHECK(spec["trivial_value"] == 4.0);
}

TEST_CASE("verify rejects a non-difference set with a witness and exit 1") {
    auto path = temp_file("bad.json");
    std::ofstream(path) << R"({"group":{"moduli":[4]},"elements":[[0],[1]]})";
    auto r = run_cli("verify --in " + path.string());
    CHECK(r.exit_code == 1);
    auto doc = json::parse(r.out);
    CHECK(doc["ok"] == false);
    CHECK(doc.contains("witness"));
    CHECK(doc["witness"].contains("count_a"));
}

TEST_CASE("simulate-shift recovers the planted secret") {
    auto path = temp_file("singer13.json");
    run_cli("construct singer --q 3 --d 2 --modulus 2,1,1,1 --out " +
            path.string());
    auto r = run_cli("simulate-shift --in " + path.string() +
                     " --secret 5 --seed 3");
    REQUIRE(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["recovered_shift"] == json::array({5}));
    CHECK(doc["peak_element"] == json::array({5}));
    double exact = doc["exact_peak_probability"];
    double closed = doc["closed_form_peak_probability"];
    CHECK(std::abs(exact - closed) < 1e-9);
}

TEST_CASE("dihedral make and solve round-trip") {
    auto path = temp_file("dihedral.json");
    auto made = run_cli("dihedral-make --d 4 --seed 7 --out " + path.string());
    REQUIRE(made.exit_code == 0);
    auto inst = json::parse(std::ifstream(path));
    CHECK(inst["N"] == 31);
    REQUIRE(inst.contains("secret"));

    auto solved = json::parse(run_cli("dihedral-solve --in " + path.string() +
                                      " --seed 8")
                                  .out);
    CHECK(solved["success"] == true);
    CHECK(solved["generator"] == solved["planted_generator"]);
}

TEST_CASE("gauss-check and sweep report passing summaries") {
    auto g = json::parse(run_cli("gauss-check --q 8").out);
    CHECK(g["pass"] == true);
    CHECK(g["max_abs_deviation"] < 1e-8);

    auto s = json::parse(
        run_cli("sweep --family hadamard --n-list 2,3 --trials 50 --seed 1").out);
    REQUIRE(s["rows"].size() == 2);
    CHECK(s["rows"][0]["v"] == 16);
    CHECK(s["rows"][1]["v"] == 64);
    double p0 = s["rows"][0]["exact_peak_probability"];
    double p1 = s["rows"][1]["exact_peak_probability"];
    CHECK(p0 == doctest::Approx(0.765625).epsilon(1e-9));
    CHECK(p1 > p0);
}

TEST_CASE("identical inputs and seed give byte-identical output") {
    std::string cmd = "construct singer --q 2 --d 4 --seed 9";
    CHECK(run_cli(cmd).out == run_cli(cmd).out);

    auto path = temp_file("singer13.json");
    run_cli("construct singer --q 3 --d 2 --modulus 2,1,1,1 --out " +
            path.string());
    std::string sim = "simulate-shift --in " + path.string() +
                      " --secret 4 --trials 40 --seed 11";
    CHECK(run_cli(sim).out == run_cli(sim).out);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("construct --family singer").exit_code == 2);
    CHECK(run_cli("no-such-subcommand").exit_code == 2);
}
