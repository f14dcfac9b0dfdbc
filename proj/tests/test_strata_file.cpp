#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hec/errors.hpp"
#include "hec/strata_file.hpp"
#include "hec/verify.hpp"

using namespace hec;

#ifndef HEC_SOURCE_DIR
#error "HEC_SOURCE_DIR must point at the repository root"
#endif

namespace {
const std::string kSourceDir = HEC_SOURCE_DIR;
}

TEST_CASE("the shipped data file matches the compiled table") {
    auto records = load_strata_file(kSourceDir + "/data/strata.toml");
    CHECK(describe_strata_mismatch(builtin_strata(), records).empty());
}

TEST_CASE("write/parse round trip preserves the data") {
    std::stringstream buf;
    write_strata_file(buf, builtin_strata());
    auto records = parse_strata(buf);
    CHECK(describe_strata_mismatch(builtin_strata(), records).empty());
}

TEST_CASE("seeded fault: Euler numbers summing to 2") {
    CHECK_THROWS_AS(load_strata_file(kSourceDir + "/tests/data/strata_bad_sum.toml"),
                    ConsistencyError);

    // the verify suite names the violated constraint
    auto raw = load_strata_raw(kSourceDir + "/tests/data/strata_bad_sum.toml");
    auto check = check_table2_sum(raw);
    CHECK(check.name == "Table-2 sum");
    CHECK_FALSE(check.pass);
    CHECK(check_cardinalities(raw).pass);
}

TEST_CASE("seeded fault: cardinality violation") {
    CHECK_THROWS_AS(load_strata_file(kSourceDir + "/tests/data/strata_bad_cardinality.toml"),
                    ConsistencyError);

    auto raw = load_strata_raw(kSourceDir + "/tests/data/strata_bad_cardinality.toml");
    auto check = check_cardinalities(raw);
    CHECK(check.name == "|Y_i| = #G_i/4");
    CHECK_FALSE(check.pass);
    CHECK(check_table2_sum(raw).pass);
}

TEST_CASE("parser rejects malformed input") {
    auto parse_text = [](const std::string& text) {
        std::istringstream in(text);
        return parse_strata(in);
    };

    CHECK_THROWS_AS(parse_text(""), ConsistencyError);  // zero records
    CHECK_THROWS_AS(parse_text("name = \"x\"\n"), std::invalid_argument);  // key before section
    CHECK_THROWS_AS(parse_text("[stratum 1]\nnonsense\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_text("[stratum 1]\nname = \"g\"\norder = 4\neuler = 1\n"),
                    std::invalid_argument);  // no spectrum line
    CHECK_THROWS_AS(parse_text("[stratum 1]\nname = \"g\"\norder = 4\neuler = 1\n"
                               "spectrum = 1 0 1 0\n"),
                    std::invalid_argument);  // five fields required
    // root order 5 does not divide 336
    CHECK_THROWS_AS(parse_text("[stratum 1]\nname = \"g\"\norder = 4\neuler = 1\n"
                               "spectrum = 5 1 1 0 1\n"),
                    ConsistencyError);
}

TEST_CASE("seeded fault: doctored motivic table fails the L=1 bridge") {
    auto rows = table5();
    // replace the (4,0,0) row L^2 - 2 by L^2 - 3
    for (auto& [la, poly] : rows)
        if (la == Partition(4, 0, 0)) poly.coeff[0] = -3;
    auto check = check_l1_consistency(rows);
    CHECK(check.name == "L=1 consistency");
    CHECK_FALSE(check.pass);

    CHECK(check_l1_consistency(table5()).pass);
}

TEST_CASE("full verification suite passes on the shipped data") {
    auto results = run_verification(kSourceDir + "/data/strata.toml");
    CHECK(results.size() >= 6);
    for (const auto& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
