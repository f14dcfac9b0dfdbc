#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#ifndef HEC_CLI_PATH
#error "HEC_CLI_PATH must point at the hec binary"
#endif
#ifndef HEC_SOURCE_DIR
#error "HEC_SOURCE_DIR must point at the repository root"
#endif

namespace {

const std::string kCli = HEC_CLI_PATH;
const std::string kSourceDir = HEC_SOURCE_DIR;

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    std::string cmd = kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.stdout_text.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("euler subcommand") {
    auto r = run("euler --lambda 0,0,0");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "1\n");

    CHECK(run("euler --lambda 9,1,0").stdout_text == "-22\n");
    CHECK(run("euler --lambda 3,0,0").stdout_text == "0\n");

    CHECK(run("euler --lambda 0,0,1").exit_code == 1);  // not weakly decreasing
    CHECK(run("euler --lambda x,y").exit_code == 1);
    CHECK(run("euler").exit_code == 1);
    CHECK(run("").exit_code == 1);  // subcommand required
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("table subcommand matches the golden fixture") {
    auto r = run("table --max-weight 10");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == read_file(kSourceDir + "/tests/data/table4_golden.txt"));

    auto small = run("table --max-weight 4");
    CHECK(small.exit_code == 0);
    int rows = 0;
    for (char c : small.stdout_text)
        if (c == '\n') ++rows;
    CHECK(rows == 7);
    CHECK(small.stdout_text.find("(2,1,1)\t0\n") != std::string::npos);

    CHECK(run("table --max-weight 0").stdout_text == "(0,0,0)\t1\n");
}

TEST_CASE("invariants subcommand") {
    CHECK(run("invariants --stratum 1 --lambda 2,0,0").stdout_text == "21\n");
    CHECK(run("invariants --stratum 1 --lambda 3,0,0").stdout_text == "0\n");
    CHECK(run("invariants --stratum 11 --lambda 0,0,0").stdout_text == "1\n");
    CHECK(run("invariants --stratum 12 --lambda 0,0,0").exit_code == 1);
    CHECK(run("invariants --stratum 0 --lambda 0,0,0").exit_code == 1);
}

TEST_CASE("csv and json output is byte-stable") {
    auto csv1 = run("table --max-weight 6 --format csv");
    auto csv2 = run("table --max-weight 6 --format csv");
    CHECK(csv1.exit_code == 0);
    CHECK(csv1.stdout_text == csv2.stdout_text);
    CHECK(csv1.stdout_text.rfind("lambda_1,lambda_2,lambda_3,weight,euler\n", 0) == 0);

    auto json1 = run("euler --lambda 2,2,2 --format json");
    auto json2 = run("euler --lambda 2,2,2 --format json");
    CHECK(json1.stdout_text == json2.stdout_text);
    CHECK(json1.stdout_text == "{\"lambda\":[2,2,2],\"euler\":\"-3\"}\n");

    CHECK(run("euler --lambda 0,0,0 --format yaml").exit_code == 1);
}

TEST_CASE("verify subcommand") {
    auto good = run("verify --strata-file " + kSourceDir + "/data/strata.toml");
    CHECK(good.exit_code == 0);
    CHECK(good.stdout_text.find("FAIL") == std::string::npos);
    CHECK(good.stdout_text.find("PASS Table-2 sum") != std::string::npos);
    CHECK(good.stdout_text.find("PASS Table 4 golden values") != std::string::npos);

    auto bad = run("verify --strata-file " + kSourceDir + "/tests/data/strata_bad_sum.toml");
    CHECK(bad.exit_code == 2);
    CHECK(bad.stdout_text.find("FAIL Table-2 sum") != std::string::npos);

    auto missing = run("verify --strata-file /nonexistent/strata.toml");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("ffcheck subcommand at q = 3") {
    auto r = run("ffcheck --q 3");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("match=FAIL") == std::string::npos);
    CHECK(r.stdout_text.find("q=3 lambda=(0,0,0) raw_sum=11664 divisor=48 trace_sum=243 "
                             "expected=243 match=PASS") != std::string::npos);

    auto na = run("ffcheck --q 3 --lambda 6,0,0");
    CHECK(na.exit_code == 0);
    CHECK(na.stdout_text.find("expected=n/a match=n/a") != std::string::npos);

    CHECK(run("ffcheck --q 7").exit_code == 1);
    CHECK(run("ffcheck --q 3 --shards 0").exit_code == 1);

    auto csv = run("ffcheck --q 3 --lambda 2,0,0 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.stdout_text ==
          "q,lambda_1,lambda_2,lambda_3,raw_sum,divisor,trace_sum,expected,match\n"
          "3,2,0,0,-48,48,-1,-1,PASS\n");
}
