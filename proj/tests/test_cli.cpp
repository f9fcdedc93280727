#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

std::string cli_path() {
    const char* p = std::getenv("FOXCOLOR_CLI_PATH");
    REQUIRE_MESSAGE(p != nullptr, "FOXCOLOR_CLI_PATH not set");
    return p;
}

std::string data_dir() {
    const char* p = std::getenv("FOXCOLOR_DATA_DIR");
    REQUIRE_MESSAGE(p != nullptr, "FOXCOLOR_DATA_DIR not set");
    return p;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + "'" + cli_path() + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), ("cannot open " + path).c_str());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("census --help").exit_code == 0);
}

TEST_CASE("bad arguments exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("census --mod 11").exit_code == 2);           // missing --size
    CHECK(run_cli("det --pd 'X(1,2,3'").exit_code == 2);        // parse error
    CHECK(run_cli("det --pd 'X(1,4,2,5)'").exit_code == 2);     // validation error
    CHECK(run_cli("det --pd 3_1 --pretzel 1,1,1").exit_code == 2);
    CHECK(run_cli("colorable --pd 3_1 --mod 1").exit_code == 2);
}

TEST_CASE("determinants") {
    auto r = run_cli("det --pd 3_1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "3\n");
    CHECK(run_cli("det --pd 4_1").output == "5\n");
    CHECK(run_cli("det --pd L8n8").output == "0\n");
    CHECK(run_cli("det --pretzel 2,3,7").output == "41\n");
    CHECK(run_cli("det --pretzel 2,-2,2,-2").output == "0\n");

    // raw PD text and stdin agree with the bundled name
    CHECK(run_cli("det --pd 'X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)'").output == "3\n");
    CHECK(run_cli("det --pd -", "echo 'X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)' | ").output == "3\n");
}

TEST_CASE("colorable exit codes") {
    CHECK(run_cli("colorable --pd 3_1 --mod 3").exit_code == 0);
    CHECK(run_cli("colorable --pd 3_1 --mod 5").exit_code == 1);
    CHECK(run_cli("colorable --pd 3_1 --mod 5").output == "not colorable\n");
}

TEST_CASE("colorings and the resource guard") {
    auto r = run_cli("colorings --pd L8n8 --mod 6 --palette 0,1,2,3 --limit 100");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("colors)") != std::string::npos);

    CHECK(run_cli("colorings --pd 3_1 --mod 5").exit_code == 1);  // none exist

    r = run_cli("colorings --pd 4_1 --mod 5", "FOXCOLOR_STATE_LIMIT=2 ");
    CHECK(r.exit_code == 3);
}

TEST_CASE("mincolors") {
    CHECK(run_cli("mincolors --pd 3_1 --mod 3").output == "3\n");
    CHECK(run_cli("mincolors --pd 4_1 --mod 5").output == "4\n");
    CHECK(run_cli("mincolors --pd L8n8 --mod 5").output == "4\n");
    CHECK(run_cli("mincolors --pd 3_1 --mod 5").exit_code == 1);
}

TEST_CASE("normalize") {
    auto r = run_cli("normalize --pd 3_1 --mod 3 --values 1,2,0");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("via (x") != std::string::npos);
}

TEST_CASE("set-test") {
    CHECK(run_cli("set-test --mod 11 --set 0,1,2,3,6").exit_code == 0);
    auto r = run_cli("set-test --mod 11 --set 0,1,2,3,9");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("halfset: excluded via (x1+2)") != std::string::npos);

    r = run_cli("set-test --mod 11 --set 0,1,2,3,7");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("isolated: 7") != std::string::npos);

    r = run_cli("set-test --mod 11 --set 0,1,2,3,6 --format json");
    CHECK(r.output.find("\"has_blue_edge\": true") != std::string::npos);
}

TEST_CASE("set-graph dot output") {
    auto r = run_cli("set-graph --mod 11 --set 0,1,2,3,7 --format dot");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("graph") != std::string::npos);
    CHECK(r.output.find("\"0\" -- \"2\" [color=red];") != std::string::npos);
    CHECK(r.output.find("\"0\" -- \"3\" [color=blue];") != std::string::npos);
}

TEST_CASE("census lines") {
    auto r = run_cli("census --mod 11 --size 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "56 sets, 6 classes, 4 candidates: {0,1,2,3,4,6} {0,1,2,3,4,7} "
          "{0,1,2,3,5,6} {0,1,2,3,5,9}\n");

    r = run_cli("census --mod 13 --size 6");
    CHECK(r.output.rfind("120 sets, 14 classes, 8 candidates:", 0) == 0);

    r = run_cli("census --mod 17 --size 6");
    CHECK(r.output.rfind("364 sets, 49 classes, 9 candidates:", 0) == 0);

    CHECK(run_cli("census --mod 11 --size 4").output == "8 sets, 3 classes, 0 candidates:\n");
}

TEST_CASE("set-classify") {
    auto r = run_cli("set-classify --mod 11 --size 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("{0,1,2,3,6} :") != std::string::npos);
    CHECK(r.output.find("{0,1,2,3,8}") != std::string::npos);
}

TEST_CASE("verdict tables against golden files") {
    auto r = run_cli("table1 --golden '" + data_dir() + "/golden/table1.txt'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("golden match") != std::string::npos);

    r = run_cli("table2 --golden '" + data_dir() + "/golden/table2.txt'");
    CHECK(r.exit_code == 0);

    CHECK(run_cli("table1 --format csv").output.rfind("modulus,elements,verdict", 0) == 0);
}

TEST_CASE("bounds table against golden file") {
    auto r = run_cli("bounds --max-n 16");
    CHECK(r.exit_code == 0);
    CHECK(r.output == slurp(data_dir() + "/golden/table3.txt"));
    CHECK(run_cli("stoimenow --max-n 16").output == r.output);
    CHECK(r.output.find("6969") != std::string::npos);
}

TEST_CASE("removable") {
    auto r = run_cli("removable --mod 11 --set 0,1,2,3,4,6 --targets '0,1,2,3,6;0,1,2,4,7'");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("3 -> {0,1,2,3,6}") != std::string::npos);
    CHECK(r.output.find("4 -> {0,1,2,3,6}") != std::string::npos);

    CHECK(run_cli("removable --mod 11 --set 0,1,2,3,7 --targets 0,1,2,4,7").exit_code == 1);
}

TEST_CASE("pretzel-det and equality report") {
    CHECK(run_cli("pretzel-det --pretzel -2,3,7").output == "1\n");

    auto r = run_cli("equality-report");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("3_1") != std::string::npos);
    CHECK(r.output.find("4_1") != std::string::npos);
}
