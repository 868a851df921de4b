// End-to-end tests of the command-line tool: output determinism, the
// round-trip contract of field-table, and the exit-code mapping.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "gqs/io.hpp"

#ifndef GALOISQ_CLI_PATH
#error "GALOISQ_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string command = std::string(GALOISQ_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

const std::string kGf9Spec = "--spec p=3,l=2,poly=2,1,h=1,0";

}  // namespace

TEST_CASE("repeated invocations are byte-identical") {
    const std::vector<std::string> invocations{
        "field-table " + kGf9Spec,
        "irreducibles -p 3 -l 2",
        "operator " + kGf9Spec + " --which F",
        "frobenius-decompose " + kGf9Spec + " --emit-operators",
        "invariants " + kGf9Spec + " --suite displacement",
        "analytic " + kGf9Spec + " --state 1,1 --r-nodes 4 --phi-nodes 3"};
    for (const std::string& args : invocations) {
        const RunResult first = run(args);
        const RunResult second = run(args);
        CHECK(first.exit_code == 0);
        CHECK(first.output == second.output);
        CHECK(!first.output.empty());
    }
}

TEST_CASE("field-table round-trips to an equal context") {
    const RunResult result = run("field-table " + kGf9Spec);
    REQUIRE(result.exit_code == 0);
    const auto doc = nlohmann::json::parse(result.output);

    std::string spec = "p=" + std::to_string(doc["p"].get<int>()) +
                       ",l=" + std::to_string(doc["ell"].get<int>()) +
                       ",poly=" + doc["poly"].get<std::string>() + ",h=" + doc["h"].get<std::string>();
    const auto rebuilt = gqs::context_from_spec(spec);
    const auto original = gqs::context_from_spec("p=3,l=2,poly=2,1,h=1,0");
    CHECK(rebuilt == original);

    // tables in the document match the rebuilt context
    CHECK(doc["C"].get<std::vector<std::vector<int>>>() == rebuilt.frobenius_matrix());
    CHECK(doc["G"].get<std::vector<std::vector<int>>>() == rebuilt.G_matrix());
    CHECK(doc["E"].get<std::vector<int>>() == rebuilt.trace_table());
}

TEST_CASE("worked table values for both planck constants") {
    const auto doc1 = nlohmann::json::parse(run("field-table " + kGf9Spec).output);
    CHECK(doc1["G"].get<std::vector<std::vector<int>>>() ==
          std::vector<std::vector<int>>{{0, 2}, {2, 1}});
    const auto doc2 = nlohmann::json::parse(run("field-table --spec p=3,l=2,poly=2,1,h=1,1").output);
    CHECK(doc2["G"].get<std::vector<std::vector<int>>>() ==
          std::vector<std::vector<int>>{{2, 1}, {1, 1}});
}

TEST_CASE("operator output parses back into a unitary matrix") {
    const RunResult result = run("operator " + kGf9Spec + " --which F");
    REQUIRE(result.exit_code == 0);
    const gqs::Matrix f = gqs::matrix_from_json(result.output);
    REQUIRE(f.rows() == 9);
    CHECK(gqs::max_abs_diff(f * f.adjoint(), gqs::Matrix::Identity(9, 9)) < 1e-10);

    const RunResult identity = run("operator " + kGf9Spec + " --which D --alpha 0,0 --beta 0,0");
    CHECK(gqs::max_abs_diff(gqs::matrix_from_json(identity.output), gqs::Matrix::Identity(9, 9)) <
          1e-12);
}

TEST_CASE("frobenius-decompose reports the layer structure") {
    const auto doc = nlohmann::json::parse(run("frobenius-decompose " + kGf9Spec).output);
    CHECK(doc["s"] == 3);
    CHECK(doc["layer_b_count"] == 3);
    CHECK(doc["orbits"].size() == 6);
    CHECK(doc["copy_subspaces"].size() == 2);
}

TEST_CASE("evolve applies the subspace shift") {
    const RunResult result = run("evolve " + kGf9Spec + " --kappa 0 --state 0,1 --N 1");
    REQUIRE(result.exit_code == 0);
    const gqs::Vector state = gqs::state_from_json(result.output);
    // canonical ordering sends |X;e> to |X;2e> (index 6)
    CHECK(std::abs(state(6) - std::complex<double>{1.0, 0.0}) < 1e-12);
}

TEST_CASE("analytic emits the documented CSV headers") {
    const RunResult grid = run("analytic " + kGf9Spec + " --state 1,1 --r-nodes 3 --phi-nodes 2");
    CHECK(grid.output.rfind("sheet,r,phi,re,im\n", 0) == 0);
    const RunResult jumps =
        run("analytic " + kGf9Spec + " --state 1,1 --r-nodes 3 --discontinuity");
    CHECK(jumps.output.rfind("kappa,r,re,im\n", 0) == 0);
}

TEST_CASE("--out writes the same bytes to a file") {
    const std::string path = "/tmp/galoisq_cli_test_out.json";
    const RunResult to_stdout = run("field-table " + kGf9Spec);
    const RunResult to_file = run("field-table " + kGf9Spec + " --out " + path);
    CHECK(to_file.exit_code == 0);
    std::ifstream file(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(content == to_stdout.output);
    std::remove(path.c_str());
}

TEST_CASE("the full invariants report passes") {
    const RunResult result = run("invariants " + kGf9Spec + " --suite all");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("RESULT PASS") != std::string::npos);
    CHECK(result.output.find("FAIL") == std::string::npos);
    CHECK(result.output.find("analytic.gram_identity") != std::string::npos);
}

TEST_CASE("exit codes") {
    SUBCASE("usage errors exit 1") {
        CHECK(run("no-such-command").exit_code == 1);
        CHECK(run("operator " + kGf9Spec + " --which bogus").exit_code == 1);
        CHECK(run("evolve " + kGf9Spec + " --N 1").exit_code == 1);  // missing state
        CHECK(run("field-table " + kGf9Spec + " --format csv").exit_code == 1);
    }
    SUBCASE("domain errors exit 2") {
        // e^2 + e + 1 = (e - 1)^2 over Z_3
        CHECK(run("field-table --spec p=3,l=2,poly=1,1,h=1,0").exit_code == 2);
        CHECK(run("field-table --spec p=4,l=2,poly=2,1,h=1,0").exit_code == 2);
        CHECK(run("irreducibles -p 3 -l 4").exit_code == 2);
        CHECK(run("evolve " + kGf9Spec + " --kappa 0 --state 1,0 --N 1").exit_code == 2);
    }
    SUBCASE("help exits 0") {
        CHECK(run("--help").exit_code == 0);
    }
}
