#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "csknot/io.hpp"

using namespace csknot;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(CSKNOT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return RunResult{WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/csknot_test_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("verify-poly: paper polynomials and exit codes") {
    auto ok = run_cli("verify-poly '1 -9 14 -8 1'");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("CS: yes") != std::string::npos);
    CHECK(ok.output.find("positive: yes") != std::string::npos);

    auto bad = run_cli("verify-poly '1 1 1 1 1'");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("CS: no") != std::string::npos);

    auto abs5 = run_cli("verify-poly -- '-1 100 -197 197 -99 1'");
    CHECK(abs5.exit_code == 0);

    auto parse = run_cli("verify-poly '1 x 3'");
    CHECK(parse.exit_code == 64);
}

TEST_CASE("verify-matrix: paper matrix, identity, shape error") {
    const std::string good = write_temp("m_good.txt", "2 3 0 0\n2 4 1 0\n0 1 1 1\n1 2 0 1\n");
    auto ok = run_cli("verify-matrix " + good);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("charpoly (ascending): 1 -9 14 -8 1") != std::string::npos);
    CHECK(ok.output.find("f(A) = O: yes") != std::string::npos);

    const std::string id = write_temp("m_id.txt", "1 0\n0 1\n");
    CHECK(run_cli("verify-matrix " + id).exit_code == 2);

    const std::string rect = write_temp("m_rect.txt", "1 0 0\n0 1 0\n");
    CHECK(run_cli("verify-matrix " + rect).exit_code == 65);
}

TEST_CASE("family: n=4 l=0 passes all checks as json") {
    auto r = run_cli("--format json family 4 0");
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].size() == 6);
    const IntMatrix m2 = matrix_from_json(j["matrix2"]);
    CHECK(m2 == IntMatrix{{2, 11, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {11, 61, -2, 62}});
}

TEST_CASE("classify: f_{-8} complete with 2 classes") {
    auto r = run_cli("--format json classify '1 -9 14 -8 1'");
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j["class_count"] == 2);
    CHECK(j["complete"] == true);
    CHECK(j["count_is_lower_bound"] == false);
    CHECK(j["group"]["structure"] == "C2");
    // emitted matrices re-parse bit-identically
    for (const auto& cls : j["knot_pair_classes"]) {
        const IntMatrix m = matrix_from_json(cls["matrix"]);
        CHECK(matrix_from_json(matrix_to_json(m)) == m);
    }
}

TEST_CASE("classify: f_{-64} is flagged not-a-group and a lower bound") {
    auto r = run_cli("--format json --norm-bound 20 classify '1 -65 126 -64 1'");
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j["integrally_closed"] == "no");
    CHECK(j["complete"] == false);
    CHECK(j["count_is_lower_bound"] == true);
}

TEST_CASE("star-eq: equivalent, not-equivalent, and conjugate pairs") {
    const std::string comp = write_temp("comp.txt", "0 1 0 0\n0 0 1 0\n0 0 0 1\n-1 9 -14 8\n");
    const std::string second = write_temp("second.txt", "2 3 0 0\n2 4 1 0\n0 1 1 1\n1 2 0 1\n");
    CHECK(run_cli("star-eq " + comp + " " + comp).exit_code == 0);
    auto neq = run_cli("--format json star-eq " + comp + " " + second);
    CHECK(neq.exit_code == 3);
    const Json j = Json::parse(neq.output);
    CHECK(j["verdict"] == "not_equivalent");

    // U A U^{-1} for U = [[1,0,0,0],[2,1,0,0],[0,0,1,0],[0,1,0,1]]
    const std::string conj =
        write_temp("conj.txt", "-2 1 0 0\n-4 2 1 0\n2 -1 0 1\n-3 1 -13 8\n");
    auto eq = run_cli("star-eq " + comp + " " + conj);
    CHECK(eq.exit_code == 0);
}

TEST_CASE("sweep: quartic family over [-10, 0] as csv") {
    auto r = run_cli("--format csv sweep 4 -10 0");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string line;
    std::getline(in, line);
    CHECK(line == "a,integrally_closed,class_count_or_lower_bound,complete");
    int rows = 0;
    bool found_m8 = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        if (line.rfind("-8,", 0) == 0) {
            found_m8 = true;
            CHECK(line == "-8,yes,2,true");
        }
    }
    CHECK(rows == 11);
    CHECK(found_m8);
}

TEST_CASE("json outputs re-parse and are schema stable") {
    auto a = run_cli("--format json classify '1 -9 14 -8 1'");
    auto b = run_cli("--format json --threads 0 classify '1 -9 14 -8 1'");
    CHECK(a.output == b.output);
}
